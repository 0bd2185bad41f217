"""Test spec generation"""
import pytest

from syndromelab import specgen
from syndromelab import states


def test_named_specs():
    """Test named specs"""
    assert specgen.bell().representatives == ("00",)
    assert specgen.bell(-1).sign == -1
    assert specgen.psi().representatives == ("01",)
    assert specgen.ghz(6) == states.ComplementarySpec(3, ["000000"])
    assert len(specgen.example4().representatives) == 3
    paper = specgen.paper13()
    assert paper.num_qubits == 12
    assert states.parity_class(paper) is states.ParityClass.ALL_EVEN
    mixed = specgen.paper13_mixed()
    assert mixed.num_qubits == 12
    assert states.ancilla_is_entangling(mixed)


@pytest.mark.parametrize("num", [0, 3, -2])
def test_ghz_sizes(num):
    """Test ghz needs an even number of qubits"""
    with pytest.raises(ValueError):
        specgen.ghz(num)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
@pytest.mark.parametrize("sign", [1, -1])
def test_random_specs(n, sign):
    """Test random specs are valid"""
    for spec in specgen.random_specs(n, 20, sign=sign):
        assert states.is_valid(spec), states.validate_spec(spec)
        assert spec.n == n
        assert spec.sign == sign


@pytest.mark.parametrize("n", [2, 3])
@pytest.mark.parametrize(
    "parity,klass",
    [
        ("even", states.ParityClass.ALL_EVEN),
        ("odd", states.ParityClass.ALL_ODD),
        ("mixed", states.ParityClass.MIXED),
    ],
)
def test_random_parity(n, parity, klass):
    """Test parity restricted specs"""
    for spec in specgen.random_specs(n, 10, parity=parity):
        assert states.parity_class(spec) is klass


def test_random_deterministic():
    """Test that seeds determine specs"""
    first = list(specgen.random_specs(3, 5, seed=4))
    second = list(specgen.random_specs(3, 5, seed=4))
    assert first == second
    assert specgen.random_spec(2) == specgen.random_spec(2)


def test_random_errors():
    """Test bad random spec arguments"""
    with pytest.raises(ValueError):
        specgen.random_spec(0)
    with pytest.raises(ValueError):
        specgen.random_spec(1, parity="mixed")
    with pytest.raises(ValueError):
        specgen.random_spec(2, parity="sometimes")


@pytest.mark.parametrize("n,count", [(1, 2), (2, 254)])
def test_all_specs(n, count):
    """Test exhaustive enumeration"""
    specs = list(specgen.all_specs(n))
    assert len(specs) == count
    assert len(set(specs)) == count
    assert all(states.is_valid(spec) for spec in specs)
