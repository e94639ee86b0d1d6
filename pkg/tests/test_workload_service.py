import pytest

from src.domain.exceptions.domain_exceptions import ConfigurationError
from src.domain.models.workload import SfcRequest, TrafficVariant, VnfKind
from src.domain.services.workload_service import WorkloadService

LB = VnfKind.LOAD_BALANCER
WAF = VnfKind.WEB_APP_FIREWALL
HA = VnfKind.HTTP_ACCELERATOR
TM = VnfKind.TRAFFIC_MONITOR


def test_catalog_templates(catalog):
    assert [r.vnfs for r in catalog] == [
        (LB, WAF),
        (HA, LB, WAF),
        (HA, TM, LB, WAF),
        (LB, TM, WAF),
    ]
    assert all(r.strict_order == r.vnfs for r in catalog)
    assert [r.id for r in catalog] == [0, 1, 2, 3]


def test_replicate_round_robin(workload_service, catalog):
    requests = workload_service.replicate(catalog, 8)

    assert len(requests) == 32
    assert [r.id for r in requests] == list(range(32))
    assert [r.template_id for r in requests[:8]] == [0, 1, 2, 3, 0, 1, 2, 3]
    assert requests[5].vnfs == catalog[1].vnfs
    assert sum(len(r.vnfs) for r in requests) == 96


def test_replicate_requires_a_copy(workload_service, catalog):
    with pytest.raises(ConfigurationError):
        workload_service.replicate(catalog, 0)


def test_group_by_template(workload_service, catalog):
    groups = workload_service.group_by_template(workload_service.replicate(catalog, 3))

    assert sorted(groups) == [0, 1, 2, 3]
    assert [r.id for r in groups[2]] == [2, 6, 10]


def test_traffic_pattern_a(workload_service):
    pattern = workload_service.traffic_pattern(TrafficVariant.A)

    assert pattern.period == 24
    assert pattern.peak_timestep == 14
    assert pattern.peak_rate == pytest.approx(100.0)
    assert pattern.rate(2) == pytest.approx(20.0)
    assert pattern.rate(14 + 24) == pattern.rate(14)


def test_traffic_pattern_b_is_shifted(workload_service):
    a = workload_service.traffic_pattern(TrafficVariant.A)
    b = workload_service.traffic_pattern(TrafficVariant.B)

    assert b.peak_rate == pytest.approx(a.peak_rate)
    assert b.peak_timestep == 2
    assert all(b.rate(t) == pytest.approx(a.rate(t + 12)) for t in range(24))


def test_traffic_scale(workload_service):
    pattern = workload_service.traffic_pattern(TrafficVariant.A, 2)

    assert pattern.peak_rate == pytest.approx(200.0)
    with pytest.raises(ConfigurationError):
        workload_service.traffic_pattern(TrafficVariant.A, 0)


def test_cpu_demands(workload_service):
    assert workload_service.cpu_demands[WAF] == pytest.approx(0.004)
    assert workload_service.cpu_demands[LB] == pytest.approx(0.002)


def test_invalid_template():
    with pytest.raises(ConfigurationError):
        WorkloadService(templates="LB>XYZ").catalog_sfcrs()


def test_non_positive_demand():
    with pytest.raises(ConfigurationError):
        WorkloadService(cpu_demands={kind: 0.0 for kind in VnfKind})


def test_strict_order_must_be_part_of_request():
    with pytest.raises(ValueError):
        SfcRequest(id=0, vnfs=(LB,), strict_order=(WAF,))
