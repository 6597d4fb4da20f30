"""Shared table of CLI golden cases, one entry per verb variant.

Used by the CLI unit tests (in-process) and the acceptance suite
(spawned processes); both compare byte-for-byte against tests/golden/.
"""

import pathlib

HERE = pathlib.Path(__file__).parent
DATA = HERE / "data"
GOLDEN = HERE / "golden"

GOLDEN_CASES = [
    (
        "member_shifted_pair.json",
        ("member", str(DATA / "shifted_pair.ideal"), "y1^{x+1}*y2^{x+1}", "y1", "1"),
    ),
    ("closure_squares_wm.json", ("closure", str(DATA / "squares.ideal"), "--kind", "wm")),
    ("reduce_cross.json", ("reduce", str(DATA / "cross.ideal"))),
    ("decompose_cross.json", ("decompose", str(DATA / "cross.ideal"))),
    ("decompose_perfect_pair.json", ("decompose", str(DATA / "perfect_pair.ideal"))),
    ("dual_cross_point.json", ("dual", str(DATA / "cross.ideal"), "--point", "1,1")),
    ("dual_cross_default.json", ("dual", str(DATA / "cross.ideal"))),
    (
        "check_prime_shifted_pair.json",
        ("check", str(DATA / "shifted_pair.ideal"), "--predicate", "prime"),
    ),
    (
        "check_radical_squares.json",
        ("check", str(DATA / "squares.ideal"), "--predicate", "radical"),
    ),
    (
        "check_reflexive_shifted_pair.json",
        ("check", str(DATA / "shifted_pair.ideal"), "--predicate", "reflexive"),
    ),
    (
        "verify_small.json",
        (
            "verify", "--arity", "1", "--max-degree", "1", "--max-coeff-sum", "1",
            "--sets", "2", "--seed", "7",
        ),
    ),
]
