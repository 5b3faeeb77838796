import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

BIB = "http://example.org/bib/"

SAMPLE_TQ = [(1, 5, 2), (6, 8, 1), (11, 12, 3), (14, 16, 2), (17, 18, 5), (19, 20, 1)]


@pytest.fixture
def fixtures_dir():
    return FIXTURES


@pytest.fixture
def wa_network():
    """2 works x 2 authors: w1 by a1 and a2, w2 by a2."""
    from kgnet.network import Network

    net = Network("WA")
    w1 = net.add_node("works", "w1")
    w2 = net.add_node("works", "w2")
    a1 = net.add_node("authors", "a1")
    a2 = net.add_node("authors", "a2")
    net.add_relation("WA", ("works", "authors"))
    for w, a in [(w1, a1), (w1, a2), (w2, a2)]:
        net.add_link("WA", w, a)
    return net
