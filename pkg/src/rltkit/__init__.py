"""Binomial-coefficient sums mod 2 as run length transforms of linear recurrences."""

__version__ = "0.1.0"

from .bitnum import BitWord, SumSpec, binom_parity, binom_parity_signed, runs_of_ones, sum_oracle, to_bits
from .automaton import PairAutomaton, compile_pair_automaton, flush_accepts, lucas_automaton
from .linrep import (
    LinearRepresentation,
    counting_representation,
    equivalent,
    evaluate,
    linear_combination,
    minimize,
    reverse,
)
from .rlt import (
    LinearRecurrence,
    NotAnRLT,
    berlekamp_massey,
    identify_rlt,
    normal_form,
    recurrence_terms,
    run_length_transform,
)
from .compiler import Fixture, compile, fixtures, get_fixture, verify_fixture

__all__ = [
    "BitWord", "SumSpec", "binom_parity", "binom_parity_signed", "runs_of_ones", "sum_oracle", "to_bits",
    "PairAutomaton", "compile_pair_automaton", "flush_accepts", "lucas_automaton",
    "LinearRepresentation", "counting_representation", "equivalent", "evaluate", "linear_combination",
    "minimize", "reverse",
    "LinearRecurrence", "NotAnRLT", "berlekamp_massey", "identify_rlt", "normal_form", "recurrence_terms",
    "run_length_transform",
    "Fixture", "compile", "fixtures", "get_fixture", "verify_fixture",
]
