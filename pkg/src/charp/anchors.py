"""Anchor strings attached to certificate steps.

Each anchor is a formula or citation label naming what a certificate step
checks.  Certificates may only use strings from this table.
"""

ANCHORS = {
    "ci_colon": r"(I^{[q]}:_S I) = (\omega^{q-1}) + I^{[q]}",
    "fedder": r"(I^{[p]}:_S I)\nsubseteq \mathfrak{m}^{[p]}",
    "fedder_ci": r"\omega^{p-1} \notin \mathfrak{m}^{[p]}",
    "glassbrenner": r"c(I^{[q]}:_S I)\nsubseteq \mathfrak{m}^{[q]}",
    "T.generators": r"f_1&= w_{21}z_{12} - w_{12}z_{21}+w_{23}z_{32} - w_{32}z_{23}",
    "T.fedder_quotient": r"(w_{12}z_{21}, \ \  -w_{22}z_{21}+w_{31}z_{23},\  \ w_{22}z_{12},\ \ w_{13}z_{31})",
    "T.fedder_survivor": r"(w_{12}w_{13}w_{22}w_{31}z_{12}z_{21}z_{23}z_{31})^{p-1}",
    "T.jacobian": r"\det \frac{\partial(f_1,f_2,f_3,f_4)}{\partial(w_{31},w_{32},z_{31},z_{32})}",
    "T.minor": r"=(w_{23}z_{13}-w_{13}z_{23})^2",
    "T.regseq": r"g&=w_{23}^2-w_{13}w_{32}",
    "T.w21": r"w_{21}^4=(w_{21}w_{23}+w_{23}^2-w_{13}w_{32}) g_1",
    "T.witness": r"=(w_{12}w_{13}w_{22} w_{23}w_{32}z_{13}z_{21}z_{22}z_{23}z_{31})^{p-1}",
    "A3.generators": r"c_{11}&=x_{12}y_{21} - x_{21}y_{12} + x_{13}y_{31} - x_{31}y_{13}",
    "A3.minor": r"f\coloneqq x_{13}y_{23}(x_{13}y_{31}-x_{31}y_{13}) =- \det",
    "A3.hsop": r"18=\dim \Bbbk[X,Y]",
    "A3.criterion": r"(f)(c_{11}c_{22}c_{31}c_{13})^{p^2-1} \notin \mathfrak{m}^{[p^2]}",
    "A3.witness": r"=(x_{11}x_{13}x_{21}x_{23}x_{32}y_{12}y_{13}y_{21}y_{23}y_{31}y_{32})^{p^2-1}",
    "A4.generators": r"\{c_{11},c_{22},c_{33},c_{41},c_{32},c_{23},c_{14}\}",
    "A4.hsop": r"32=\dim \Bbbk[X,Y]",
    "A4.residual": r"x_{12}^7)",
    "A4.witness": (r"(x_{12}x_{13}x_{14}x_{21}x_{23}x_{31}x_{32}x_{34}x_{41}x_{42}x_{43}"
                   r"y_{11}y_{12}y_{13}y_{14}y_{21}y_{22}y_{23}y_{24}y_{34}y_{42})^{p-1}"),
    "trace": r"C\coloneqq XY-YX=(c_{ij})",
    "split.omega1": r"(i,j)=(k+1,l) \text{ or }(l,k+1)",
    "split.omega1_size": r"+ 2(4k-1)",
    "split.odd": r"A_{n-1} \otimes_K \frac{\Bbbk[w_1,\ w_2, \ w_3, \ w_4]}{(w_1w_4-w_2w_3)}",
    "split.tprime": r"x_{k+1,n}y_{n,k+1} - x_{n,k+1}y_{k+1,n} + ...",
    "split.tprime_T": r"T'[w_{33},z_{33}]=T",
    "dim.odd": r"dim A_{2k-1} = 8k^2-12k+6",
    "dim.even": r"dim A_{2k}= 8k^2-4k+1",
    "offdiag": r"(c_{ij})_{1\leq i,j\leq n, ~i\neq j}",
    "cite.deformation": "[HH94a] Theorem 4.2; [Fe83] Theorem 3.4",
    "cite.test_element": "[HHFrance89] Theorem 3.4; [FW89] Proposition 2.5",
    "cite.direct_summand": "[HH90] Proposition 4.12",
    "cite.tensor": "[HH94a] Theorem 7.45",
    "cite.determinantal": "[HH94b] Theorem 7.14",
    "cite.ci": "[KY22] Theorem 3.4, Theorem 3.7, Theorem 3.9",
    "cite.fpure_known": "[KY22] Theorems 3.7, 3.9, 4.3",
    "cite.diag_known": "[KY22] Theorem 2.3",
    "cite.offdiag_known": "[Ka18] Theorem 6; [KY22] page 30",
    "cite.small_n": "[Ka18] pages 201-202",
}

ANCHOR_VALUES = frozenset(ANCHORS.values())
