from uqplus.suite import paper_checks, run_suite

# two displayed formulas do not hold as printed; see the identity and
# relation tests for the exact differences
KNOWN_FAILURES = {"a2_serre_relations", "torus_identity_1"}


def test_suite_results():
    rep = run_suite()
    failed = {r.name for r in rep.failures}
    assert failed == KNOWN_FAILURES
    assert rep.seconds < 10


def test_checks_are_unique_and_labelled():
    checks = paper_checks()
    keys = [(c.group, c.name) for c in checks]
    assert len(keys) == len(set(keys))
    assert all(c.label for c in checks)
