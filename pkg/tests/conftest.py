from hypothesis import HealthCheck, settings

settings.register_profile(
    "package",
    deadline=None,
    max_examples=50,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("package")


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One PASS/FAIL line per acceptance criterion at the end of the run."""
    lines = {}
    for status in ("passed", "failed", "error"):
        for report in terminalreporter.stats.get(status, []):
            name = getattr(report, "nodeid", "")
            if "test_acceptance.py::test_criterion_" in name:
                label = name.split("::test_criterion_", 1)[1]
                verdict = "PASS" if status == "passed" else "FAIL"
                lines[label] = verdict
    if lines:
        terminalreporter.write_sep("-", "acceptance criteria")
        for label in sorted(lines, key=lambda s: int(s.split("_")[0])):
            terminalreporter.write_line(f"criterion {label}: {lines[label]}")
