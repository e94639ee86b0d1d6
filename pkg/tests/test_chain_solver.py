import numpy as np
import pytest

from src.domain.models.workload import SfcRequest, VnfKind
from src.domain.services.chain_solver import ChainSolver, order_by_priority
from src.domain.services.predictor_service import FeatureUniverse, PredictorService

LB = VnfKind.LOAD_BALANCER
WAF = VnfKind.WEB_APP_FIREWALL
HA = VnfKind.HTTP_ACCELERATOR
TM = VnfKind.TRAFFIC_MONITOR


def kinds(chain):
    return [v.kind for v in chain]


def is_subsequence(needle, haystack):
    it = iter(haystack)
    return all(item in it for item in needle)


def test_sorts_by_descending_priority():
    assert kinds(order_by_priority([LB, WAF, HA], [0.1, 0.9, 0.5])) == [WAF, HA, LB]


def test_ties_keep_request_order():
    assert kinds(order_by_priority([LB, WAF, HA], [0.5, 0.5, 0.5])) == [LB, WAF, HA]


def test_strict_order_is_repaired():
    chain = order_by_priority([LB, WAF], [0.1, 0.9], strict_order=(LB, WAF))

    assert kinds(chain) == [LB, WAF]
    assert [v.priority for v in chain] == [0.1, 0.9]


def test_repair_moves_early_strict_vnf_behind_previous_one():
    chain = order_by_priority([HA, TM, LB, WAF], [0.1, 0.9, 0.5, 0.7], strict_order=(LB, WAF))

    assert kinds(chain) == [TM, LB, WAF, HA]


def test_free_vnfs_keep_their_priority_order():
    chain = order_by_priority([HA, LB, WAF], [0.9, 0.2, 0.5], strict_order=(LB,))

    assert kinds(chain) == [HA, WAF, LB]


def test_strict_order_always_holds():
    rng = np.random.default_rng(0)
    vnfs = [HA, TM, LB, WAF]
    for _ in range(1000):
        strict = [vnfs[i] for i in sorted(rng.choice(4, rng.integers(0, 5), replace=False))]
        strict = list(rng.permutation(strict)) if rng.random() < 0.5 else strict
        chain = order_by_priority(vnfs, rng.uniform(-1, 1, 4), strict_order=strict)

        assert sorted(kinds(chain), key=vnfs.index) == vnfs
        assert is_subsequence(strict, kinds(chain))


def test_compose_chain_keeps_catalog_order(catalog):
    service = PredictorService()
    universe = FeatureUniverse(n_sfcrs=len(catalog))
    solver = ChainSolver(universe, service)
    spec = service.build_predictors(universe, 16, seed=7).hvpp
    rng = np.random.default_rng(1)

    for _ in range(1000):
        hvpp = service.bind(spec, rng.uniform(-np.pi, np.pi, 2))
        for request in catalog:
            fg = solver.compose_chain(request, hvpp)
            assert fg.sfcr_id == request.id
            assert fg.kinds == list(request.strict_order)


def test_compose_chain_attaches_priorities():
    service = PredictorService()
    universe = FeatureUniverse(n_sfcrs=1)
    solver = ChainSolver(universe, service)
    hvpp = service.bind(service.build_predictors(universe, 2, seed=3).hvpp, (1.0, -2.0))
    request = SfcRequest(id=0, vnfs=(HA, TM, LB))

    fg = solver.compose_chain(request, hvpp)

    priorities = [v.priority for v in fg.ordered_vnfs]
    assert priorities == sorted(priorities, reverse=True)
    assert all(-1.0 <= p <= 1.0 for p in priorities)
    assert sorted(fg.kinds, key=request.vnfs.index) == list(request.vnfs)


@pytest.mark.parametrize("strict", [(WAF, LB), (TM, HA)])
def test_reversed_strict_pairs(strict):
    chain = order_by_priority([LB, WAF, HA, TM], [0.9, 0.1, 0.8, 0.2], strict_order=strict)

    assert is_subsequence(strict, kinds(chain))
