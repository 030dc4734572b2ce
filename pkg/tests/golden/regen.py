"""Rewrite the golden CLI outputs from the brute-force oracle (never from projschub)."""

import pathlib
import sys

HERE = pathlib.Path(__file__).parent
sys.path.insert(0, str(HERE.parent))

import oracle  # noqa: E402

(HERE / "coeff_3_3_4.json").write_text(oracle.json_beta_coefficient(3, 3, 4))
(HERE / "expand_2_2_n3.txt").write_text(oracle.text_t_expansion(2, 2, 3))
(HERE / "polytope_3_3_4.txt").write_text(oracle.text_polytope(3, 3, 4))
