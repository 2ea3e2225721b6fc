"""The acceptance battery, one test per criterion, at the full contract
ranges.  Each test prints its pass/fail line."""

from rsl import acceptance


def _run(fn, **kwargs):
    report = fn(**kwargs)
    status = "PASS" if report["passed"] else "FAIL"
    print(
        f"{status} criterion {report['criterion']:2d} [{report['name']}] "
        f"({report['seconds']}s)"
    )
    assert report["passed"], report["detail"]


def test_criterion_01_initial_segment_vanishing():
    _run(acceptance.criterion_1)


def test_criterion_02_positivity_without_rank_one():
    _run(acceptance.criterion_2)


def test_criterion_03_theorem22_positivity():
    _run(acceptance.criterion_3)


def test_criterion_04_vanishing_predicates():
    _run(acceptance.criterion_4)


def test_criterion_05_stability():
    _run(acceptance.criterion_5)


def test_criterion_06_partitioning_verified():
    _run(acceptance.criterion_6)


def test_criterion_07_h_agreement():
    _run(acceptance.criterion_7)


def test_criterion_08_descent_characterization():
    _run(acceptance.criterion_8)


def test_criterion_09_hook_multiplicities():
    _run(acceptance.criterion_9)


def test_criterion_10_witness_chains():
    _run(acceptance.criterion_10)


def test_criterion_11_worked_facets():
    _run(acceptance.criterion_11)


def test_criterion_12_oracle_cross_checks():
    _run(acceptance.criterion_12)


def test_criterion_13_lengthening_condition():
    _run(acceptance.criterion_13)
