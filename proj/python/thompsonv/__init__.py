"""Evaluation and word problems in Thompson's group V, 2V and the monoid M_{2,1}.

Words, strings and tables are passed as text in the same formats the command-line tool
reads; "e" is the empty string.
"""

from ._core import (  # noqa: F401
    Error,
    check2v,
    classify,
    compile_circuit,
    complement,
    complement2v,
    complement_single,
    cvp,
    decompose_pushpop,
    embed,
    eval2v,
    eval_via_commutation,
    evaluate,
    evaluate_universal,
    extend2v,
    monoid_check,
    pfix_member,
    recognize,
    selftest,
    sequential_apply,
    word_problem,
)
