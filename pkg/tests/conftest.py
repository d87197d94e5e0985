import json
from pathlib import Path

import numpy as np
import pytest

from tangenttri import sampling

GOLDEN = Path(__file__).parent / "golden" / "sequences.json"


def _sequences():
    def fresh():
        return sampling.make_rng(42)

    alpha, beta = sampling.sample_contacts(fresh(), 5)
    return {
        "theta_single": sampling.sample_theta_single(fresh(), 5),
        "contacts_alpha": alpha,
        "contacts_beta": beta,
        "side_incircle": sampling.sample_side_incircle(fresh(), 5),
        "side_naive": sampling.sample_side_naive(fresh(), 5),
        "side_incircle_shard3": sampling.sample_side_incircle(sampling.make_rng(42, 3), 5),
    }


@pytest.fixture(scope="session")
def golden_sequences():
    """Seed-42 draws, pinned on first run; later runs must reproduce them bit for bit."""
    current = {k: [float(x).hex() for x in np.asarray(v)] for k, v in _sequences().items()}
    if not GOLDEN.exists():
        GOLDEN.parent.mkdir(exist_ok=True)
        GOLDEN.write_text(json.dumps(current, indent=2) + "\n")
    return json.loads(GOLDEN.read_text()), current


def pytest_terminal_summary(terminalreporter):
    import sys

    module = next((m for name, m in list(sys.modules.items()) if name.endswith("test_acceptance")), None)
    results = getattr(module, "RESULTS", [])
    if results:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(results):
            terminalreporter.write_line(line)
