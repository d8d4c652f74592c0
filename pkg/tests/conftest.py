CRITERIA = {
    "test_ac1_table_totals_exact": "AC1 table totals reproduce exactly",
    "test_ac2_exactly_two_known_discrepancies": "AC2 exactly two known discrepancies, decisions unaffected",
    "test_ac3_ratios_within_tolerance": "AC3 printed ratios within +/-0.01",
    "test_ac4_decisions": "AC4 Euclidean wrong on 1 and 3, corrected right on all",
    "test_ac5_metric_axiom_suite": "AC5 axiom suite over 1e4 random instances",
    "test_ac6_delta_oracle_and_continuity": "AC6 correction matches brute force; prorated continuous",
    "test_ac7_zero_mass_is_euclidean_bitwise": "AC7 zero-mass prototypes give Euclidean bitwise",
    "test_ac8_benchmark_determinism_and_sanity": "AC8 benchmark deterministic, null 0.5, separated 1.0",
}

_outcomes = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance: exit criteria")


def pytest_runtest_logreport(report):
    name = report.nodeid.rsplit("::", 1)[-1]
    if name not in CRITERIA:
        return
    if report.when == "call" or report.failed:
        _outcomes[name] = _outcomes.get(name, True) and report.passed


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for name, label in CRITERIA.items():
        if name in _outcomes:
            terminalreporter.write_line(f"{'PASS' if _outcomes[name] else 'FAIL'}  {label}")
