import pytest

from smtgi import (Alphabet, AxiomStyle, DfaSample, Formula, InputError, Kind, TraceSample,
                   build_apt_dfa, build_apt_traces, encode_expressive, encode_natural,
                   encode_transducer, encoding_stats)
from smtgi.encoding import App, Declaration, term_text

from helpers import FLIPFLOP_SAMPLE, UNARY

XY = Alphabet(("x", "y"))


def test_natural_single_state_ineq():
    f = encode_natural(DfaSample.from_words(UNARY, [""], []), 1, AxiomStyle.INEQ)
    assert [d.name for d in f.declarations] == ["delta", "output"]
    assert [term_text(t) for t in f.assertions] == [
        "(and (>= (delta 0 0) 0) (< (delta 0 0) 1))",
        "(= (output 0) true)",
    ]


def test_natural_counts():
    f = encode_natural(FLIPFLOP_SAMPLE, 2, AxiomStyle.BOOL)
    # |Σ|·n axioms + one assertion per string
    assert len(f.assertions) == 1 * 2 + 3 == 5
    assert term_text(f.assertions[-1]) == "(= (output (delta (delta 0 0) 0)) false)"


def test_expressive_counts():
    f = encode_expressive(build_apt_dfa(FLIPFLOP_SAMPLE), 2, AxiomStyle.BOOL)
    # 2 edges + 3 labels + 3 ranges + root pin
    assert len(f.assertions) == 9
    assert encoding_stats(f, 2).declaration_count == 2 + 3
    assert term_text(f.assertions[0]) == "(= (delta pi_0 0) pi_1)"
    assert term_text(f.assertions[-1]) == "(= pi_0 0)"


def test_mealy_counts():
    sample = TraceSample(Kind.MEALY, UNARY, XY, [((0,), (0,)), ((0, 0), (0, 1))])
    apt = build_apt_traces(sample)
    m, n = apt.size, 2
    f = encode_transducer(apt, n, AxiomStyle.INEQ)
    assert len(f.assertions) == (m - 1) + (m - 1) + m + 1 + n * 1
    assert f.declarations[1] == Declaration("output", ("Int", "Int"), "Int")


def test_moore_encoding_includes_root_output():
    sample = TraceSample(Kind.MOORE, UNARY, XY, [((0,), (1, 0))])
    f = encode_transducer(build_apt_traces(sample), 1, AxiomStyle.BOOL)
    texts = [term_text(t) for t in f.assertions]
    assert "(= (output pi_0) 1)" in texts
    assert "(= (output pi_1) 0)" in texts
    assert f.declarations[1].arg_sorts == ("Int",)


def test_single_disjunct_is_not_wrapped():
    f = encode_expressive(build_apt_dfa(FLIPFLOP_SAMPLE), 1, AxiomStyle.BOOL)
    assert "(= pi_1 0)" in [term_text(t) for t in f.assertions]


def test_input_errors():
    apt = build_apt_dfa(FLIPFLOP_SAMPLE)
    with pytest.raises(InputError):
        encode_natural(FLIPFLOP_SAMPLE, 0, AxiomStyle.BOOL)
    with pytest.raises(InputError):
        encode_expressive(apt, 0, AxiomStyle.BOOL)
    with pytest.raises(InputError):
        encode_transducer(apt, 1, AxiomStyle.BOOL)
    mealy_apt = build_apt_traces(TraceSample(Kind.MEALY, UNARY, XY, [((0,), (0,))]))
    with pytest.raises(InputError):
        encode_expressive(mealy_apt, 1, AxiomStyle.BOOL)


def test_formula_checks_declarations():
    f = Declaration("f", ("Int",), "Int")
    Formula((f,), [App("=", (f(0), 1))])
    with pytest.raises(InputError):
        Formula((), [App("=", (App("g", (0,)), 1))])
    with pytest.raises(InputError):
        Formula((f, f), [])
    with pytest.raises(InputError):
        Formula((f,), [App("=", (App("f", (0, 1)), 1))])


def test_negative_literals():
    assert term_text(-3) == "(- 3)"
