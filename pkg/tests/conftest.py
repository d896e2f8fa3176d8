def pytest_terminal_summary(terminalreporter):
    """Print one pass/fail line per acceptance criterion in the final report."""
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
