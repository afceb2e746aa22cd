import numpy as np

from rigtfd import verify


def test_splitmix_reference_outputs():
    # published reference values of the SplitMix64 generator
    rng = verify.SplitMix64(1234567)
    assert [rng.next_u64() for _ in range(3)] == [
        6457827717110365317,
        3203168211198807973,
        9817491932198370423,
    ]
    assert verify.SplitMix64(0).next_u64() == 0xE220A8397B1DCDAF


def test_uniform_range_and_moments():
    rng = verify.SplitMix64(3)
    u = np.array([rng.uniform() for _ in range(20000)])
    assert u.min() >= 0.0 and u.max() < 1.0
    assert abs(u.mean() - 0.5) < 0.01
    x = np.array([rng.normal() for _ in range(20000)])
    assert abs(x.mean()) < 0.03 and abs(x.var() - 1.0) < 0.05


def test_unitary_draw():
    u = verify.SplitMix64(5).unitary(4)
    assert np.max(np.abs(u.conj().T @ u - np.eye(4))) <= 1e-12


def test_seed_42_full():
    report = verify.run(42, [2, 3, 4], 100)
    assert report["overall"] is True
    for case in report["cases"]:
        assert case["max_error"] <= case["tolerance"], case


def test_structure():
    report = verify.run(1, [2], 1)
    names = [c["property"] for c in report["cases"]]
    assert len(names) >= 10 and len(set(names)) == len(names)
    assert all(c["dims"] == [2] and c["trials"] == 1 for c in report["cases"])


def test_deterministic():
    assert verify.run(9, [2, 3], 3) == verify.run(9, [2, 3], 3)


def test_fault_breaks_route_equivalence():
    report = verify.run(42, [2], 1, fault=True)
    failed = {c["property"] for c in report["cases"] if not c["passed"]}
    assert report["overall"] is False
    assert "route_equivalence" in failed
