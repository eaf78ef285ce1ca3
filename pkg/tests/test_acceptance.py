"""One test per acceptance criterion; each prints a PASS/FAIL line."""
import pytest

from ratlink.verify import CRITERIA, run_check


@pytest.mark.parametrize("number", [num for num, _, _ in CRITERIA],
                         ids=[f"{num}-{title.replace(' ', '-')}" for num, title, _ in CRITERIA])
def test_criterion(number, slow, acceptance_log):
    result = run_check(number, slow=slow)
    line = result.line()
    print(line)
    acceptance_log.append(line)
    assert result.passed, result.detail
