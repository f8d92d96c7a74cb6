import re
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from msa_gloss.evaluation import default_gold_path, load_gold
from msa_gloss.morphology import default_lexicon_path, load_lexicon
from msa_gloss.pipeline import Translator

ACCEPTANCE = {
    1: "rule-table fidelity (gold eval 1.0, < 1 s)",
    2: "interrogative + negative gloss forms (golden files)",
    3: "oracle equivalence (gold + 1000 random)",
    4: "invariant suites (>= 1000 cases each)",
    5: "precedence adversarial tests",
    6: "error paths (line numbers, exit codes)",
}


@pytest.fixture(scope="session")
def lexicon():
    return load_lexicon(default_lexicon_path())


@pytest.fixture(scope="session")
def gold():
    return load_gold(default_gold_path())


@pytest.fixture(scope="session")
def translator(lexicon):
    return Translator(lexicon)


def pytest_terminal_summary(terminalreporter):
    outcomes = {}
    for key in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(key, []):
            m = re.search(r"test_acceptance\.py::test_ac(\d+)_", getattr(rep, "nodeid", ""))
            if not m:
                continue
            n = int(m.group(1))
            outcomes[n] = outcomes.get(n, True) and key == "passed"
    if not outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(outcomes):
        status = "PASS" if outcomes[n] else "FAIL"
        terminalreporter.write_line(f"AC{n} {status}  {ACCEPTANCE.get(n, '')}")
