"""NSGA-II: non-dominated sorting, crowding distance and elitist selection."""

import logging
import math
from typing import List, Sequence, Tuple

from src.domain.exceptions.domain_exceptions import ContractViolationError
from src.domain.models.evolution import Individual

logger = logging.getLogger(__name__)

Objectives = Tuple[float, ...]


class Nsga2Service:
    """
    Selection over (acceptance ratio, average latency).

    Both objectives are handled as minimisation targets, i.e. as
    ``(-acceptance_ratio, avg_latency)``.
    """

    @staticmethod
    def dominates(a: Objectives, b: Objectives) -> bool:
        """Whether ``a`` is no worse than ``b`` everywhere and better somewhere."""
        return all(x <= y for x, y in zip(a, b)) and any(x < y for x, y in zip(a, b))

    def fast_non_dominated_sort(self, objectives: Sequence[Objectives]) -> List[List[int]]:
        """
        Partition indices into Pareto fronts.

        Returns:
            Fronts in rank order, each a sorted list of indices into ``objectives``
        """
        n = len(objectives)
        dominated_by: List[List[int]] = [[] for _ in range(n)]
        domination_count = [0] * n
        fronts: List[List[int]] = [[]]

        for p in range(n):
            for q in range(n):
                if p == q:
                    continue
                if self.dominates(objectives[p], objectives[q]):
                    dominated_by[p].append(q)
                elif self.dominates(objectives[q], objectives[p]):
                    domination_count[p] += 1
            if domination_count[p] == 0:
                fronts[0].append(p)

        i = 0
        while fronts[i]:
            next_front = []
            for p in fronts[i]:
                for q in dominated_by[p]:
                    domination_count[q] -= 1
                    if domination_count[q] == 0:
                        next_front.append(q)
            i += 1
            fronts.append(sorted(next_front))
        return fronts[:-1]

    def crowding_distance(self, objectives: Sequence[Objectives]) -> List[float]:
        """
        Crowding distance of each point within one front.

        Boundary points of every objective get infinity. An objective with
        zero range adds nothing, not even boundaries, so identical points
        stay tied and selection among them falls back to genome order.
        Fronts of one or two points are all boundary.
        """
        n = len(objectives)
        if n <= 2:
            return [math.inf] * n
        distance = [0.0] * n
        for m in range(len(objectives[0])):
            order = sorted(range(n), key=lambda i: (objectives[i][m], i))
            low = objectives[order[0]][m]
            high = objectives[order[-1]][m]
            if high == low:
                continue
            distance[order[0]] = math.inf
            distance[order[-1]] = math.inf
            for j in range(1, n - 1):
                gap = objectives[order[j + 1]][m] - objectives[order[j - 1]][m]
                distance[order[j]] += gap / (high - low)
        return distance

    def rank(self, population: Sequence[Individual]) -> List[List[Individual]]:
        """Assign rank (1 = first front) and crowding to every individual."""
        self._require_evaluated(population)
        objectives = [ind.objectives for ind in population]
        fronts = []
        for rank, front in enumerate(self.fast_non_dominated_sort(objectives), start=1):
            members = [population[i] for i in front]
            for ind, crowd in zip(members, self.crowding_distance([objectives[i] for i in front])):
                ind.rank = rank
                ind.crowding = crowd
            fronts.append(members)
        return fronts

    def select(self, population: Sequence[Individual], size: int) -> List[Individual]:
        """
        Elitist truncation of parents plus offspring to ``size`` individuals.

        Whole fronts are admitted in rank order; the front that does not fit
        is admitted by descending crowding distance. Remaining ties are broken
        by genome order so the result is deterministic.
        """
        self._require_evaluated(population)
        ordered = sorted(population, key=lambda ind: ind.sort_key())
        selected: List[Individual] = []
        for front in self.rank(ordered):
            if len(selected) + len(front) <= size:
                selected.extend(front)
                continue
            remaining = size - len(selected)
            front = sorted(front, key=lambda ind: (-ind.crowding, ind.sort_key()))
            selected.extend(front[:remaining])
            break
        return selected

    def hypervolume(self, points: Sequence[Tuple[float, float]], reference_latency: float) -> float:
        """
        Area dominated by (acceptance ratio, latency) points.

        The reference point is (0, ``reference_latency``); points with zero
        acceptance or latency at or beyond the reference add nothing.
        """
        useful = sorted(
            (lat, ar) for ar, lat in points if ar > 0 and lat < reference_latency
        )
        area = 0.0
        best_ar = 0.0
        for i, (lat, ar) in enumerate(useful):
            best_ar = max(best_ar, ar)
            next_lat = useful[i + 1][0] if i + 1 < len(useful) else reference_latency
            area += best_ar * (next_lat - lat)
        return area

    @staticmethod
    def _require_evaluated(population: Sequence[Individual]) -> None:
        for ind in population:
            if not ind.evaluated:
                raise ContractViolationError("NSGA-II selection requires evaluated individuals")
