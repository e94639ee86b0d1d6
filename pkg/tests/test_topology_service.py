import networkx as nx
import pytest

from src.domain.exceptions.domain_exceptions import (
    InvalidArityError, NodeNotFoundError, UnreachableError
)
from src.domain.models.topology import NodeId, NodeKind
from tests.helpers import edge, host


@pytest.mark.parametrize("k", [2, 4, 6])
def test_fat_tree_counts(topology_service, k):
    topology = topology_service.generate_fat_tree(k, host_cpu=1.0, link_bandwidth=5.0,
                                                  host_memory=5.0)

    assert topology.n_hosts == k ** 3 // 4
    assert topology.count(NodeKind.EDGE_SWITCH) == k * k // 2
    assert topology.count(NodeKind.AGG_SWITCH) == k * k // 2
    assert topology.count(NodeKind.CORE_SWITCH) == (k // 2) ** 2
    assert len(topology.links) == 3 * k ** 3 // 4
    assert topology_service.is_connected(topology)


def test_k2_is_a_single_line(k2_topology):
    assert k2_topology.n_hosts == 2
    assert k2_topology.count(NodeKind.CORE_SWITCH) == 1
    assert len(k2_topology.links) == 6


@pytest.mark.parametrize("k", [0, 3, -2, 5])
def test_invalid_arity_raises(topology_service, k):
    with pytest.raises(InvalidArityError):
        topology_service.generate_fat_tree(k, host_cpu=1.0, link_bandwidth=5.0, host_memory=5.0)


def test_capacities_are_uniform(k4_topology):
    assert k4_topology.host_cpu == 2.0
    assert all(link.bandwidth == 10.0 for link in k4_topology.links)
    assert all(link.propagation_delay == pytest.approx(0.1) for link in k4_topology.links)


def test_nodes_sorted_by_kind_then_index(k4_topology):
    nodes = list(k4_topology.nodes)
    assert nodes == sorted(nodes)
    assert nodes[0] == host(0)
    assert str(nodes[0]) == "h0"


def test_neighbours_are_sorted(topology_service, k4_topology):
    neighbours = [n for n, _ in topology_service.neighbours(k4_topology, edge(0))]

    assert neighbours == sorted(neighbours)
    assert neighbours[:2] == [host(0), host(1)]
    assert all(n.kind == NodeKind.AGG_SWITCH for n in neighbours[2:])


def test_neighbours_of_unknown_node(topology_service, k2_topology):
    with pytest.raises(NodeNotFoundError):
        topology_service.neighbours(k2_topology, NodeId(NodeKind.HOST, 99))


def test_host_lookup(topology_service, k4_topology):
    assert topology_service.host(k4_topology, 15) == host(15)
    with pytest.raises(NodeNotFoundError):
        topology_service.host(k4_topology, 16)


def test_edge_switch_of(topology_service, k4_topology):
    assert topology_service.edge_switch_of(k4_topology, host(0)) == edge(0)
    assert topology_service.edge_switch_of(k4_topology, host(3)) == edge(1)
    with pytest.raises(NodeNotFoundError):
        topology_service.edge_switch_of(k4_topology, edge(0))


def test_networkx_view_matches(topology_service, k4_topology):
    graph = topology_service.to_networkx(k4_topology)

    assert graph.number_of_nodes() == k4_topology.n_nodes
    assert graph.number_of_edges() == len(k4_topology.links)


def test_cross_pod_shortest_path(topology_service, k4_topology):
    path = topology_service.shortest_path(k4_topology, host(0), host(15))

    assert len(path) == 7
    graph = topology_service.to_networkx(k4_topology)
    assert len(path) - 1 == nx.shortest_path_length(graph, host(0), host(15))


def test_shortest_path_respects_usable_links(topology_service, k2_topology):
    with pytest.raises(UnreachableError):
        topology_service.shortest_path(k2_topology, host(0), host(1),
                                       usable=lambda link: host(1) not in link.endpoints)


def test_shortest_path_to_itself(topology_service, k2_topology):
    assert topology_service.shortest_path(k2_topology, host(0), host(0)) == [host(0)]


@pytest.mark.parametrize("k", [2, 4, 6])
def test_neighbours_are_symmetric(topology_service, k):
    topology = topology_service.generate_fat_tree(k, host_cpu=1.0, link_bandwidth=5.0,
                                                  host_memory=5.0)

    for node in topology.nodes:
        for neighbour, link in topology_service.neighbours(topology, node):
            back = dict(topology_service.neighbours(topology, neighbour))
            assert back[node] is link


@pytest.mark.parametrize("k", [2, 4, 6])
def test_switch_degrees(topology_service, k):
    topology = topology_service.generate_fat_tree(k, host_cpu=1.0, link_bandwidth=5.0,
                                                  host_memory=5.0)
    graph = topology_service.to_networkx(topology)

    for node in topology.nodes:
        expected = 1 if node.is_host else k
        assert graph.degree[node] == expected, str(node)
    cores = [n for n in topology.nodes if n.kind == NodeKind.CORE_SWITCH]
    for core in cores:
        pods = {n.index // (k // 2) for n in graph.neighbors(core)}
        assert len(pods) == k


def test_cross_pod_hosts_have_four_distinct_shortest_paths(topology_service, k4_topology):
    graph = topology_service.to_networkx(k4_topology)

    paths = list(nx.all_shortest_paths(graph, host(0), host(15)))

    assert len(paths) == 4
    assert len({tuple(p) for p in paths}) == 4
    assert {p[3] for p in paths} == {n for n in k4_topology.nodes
                                     if n.kind == NodeKind.CORE_SWITCH}
    assert all(len(p) == 7 for p in paths)
