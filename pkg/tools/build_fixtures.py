"""Regenerate src/gradedpi/data/fixtures.json from the claim table below.

Run from the repository root:  python3 tools/build_fixtures.py
"""

import json
from pathlib import Path

OUT = Path(__file__).resolve().parent.parent / "src" / "gradedpi" / "data" / "fixtures.json"


# -- expression helpers ------------------------------------------------------
def P(name):
    return {"param": name}


n, k, t, i = P("n"), P("k"), P("t"), P("i")
km1 = {"sub": [k, 1]}


def add(*a):
    return {"add": list(a)}


def sub(a, b):
    return {"sub": [a, b]}


def mul(*a):
    return {"mul": list(a)}


def pw(a, b):
    return {"pow": [a, b]}


def C(a, b):
    return {"binom": [a, b]}


def S(lo, hi, body, var="i", step=1):
    node = {"var": var, "from": lo, "to": hi, "body": body}
    if step != 1:
        node["step"] = step
    return {"sum": node}


def chi(lam, mu=()):
    return {"chi": {"lambda": list(lam), "mu": list(mu)}}


def ones(e):
    return {"ones": e}


ZERO_CHAR = {"add": []}

# -- fixtures ----------------------------------------------------------------
FIX = []


def fx(id, name, kind, formula, anchor, params=None, lo=1, hi=6, status="asserted", bind=None):
    d = {"id": id, "algebra": {"name": name, "params": params or {}}, "kind": kind,
         "formula": formula, "range": [lo, hi], "status": status, "anchor": anchor}
    if bind:
        d["bind"] = bind
    FIX.append(d)


def cochar(which, terms):
    return {"character": which, "terms": terms}


def gens(mode, ideal=(), space=()):
    return {"mode": mode, "ideal": list(ideal), "space": list(space)}


K3 = {"k": [3, 4]}
K2 = {"k": [2, 3]}
K2G = {"k": [2, 3, 4]}

# D^gr -----------------------------------------------------------------------
fx("Dgr.identities", "Dgr", "generators", gens("identities", ["[y1,y2]", "[z1,z2]", "[y1,z2]"]),
   r"\mathrm{Id}^{gr}(D^{gr})=\langle [y_1,y_2],[z_1,z_2],[y_1,z_2]\rangle_{T_2}", hi=5)
fx("Dgr.central", "Dgr", "generators", gens("central", space=["y1", "z1"]),
   r"C^{gr}(D^{gr})=\langle y_1,z_1\rangle_{T_2}", hi=5)
fx("Dgr.codim", "Dgr", "codim", pw(2, n), r"c_n^{gr}(D^{gr})=2^n")
fx("Dgr.central-codim", "Dgr", "central-codim", 0, r"c_n^{z,gr}(D^{gr})=0")
fx("Dgr.delta", "Dgr", "delta", pw(2, n), r"\delta_n^{gr}(D^{gr})=2^n")
_d = S(0, n, chi([sub(n, i)], [i]))
fx("Dgr.cochar", "Dgr", "cochar", cochar("graded", _d),
   r"\chi_n^{gr}(D^{gr})=\sum_{i=0}^{n}\chi_{(n-i),(i)}", hi=5)
fx("Dgr.cochar-central", "Dgr", "cochar", cochar("central", ZERO_CHAR), r"\chi_n^{z,gr}(D^{gr})=0", hi=5)
fx("Dgr.cochar-proper", "Dgr", "cochar", cochar("proper-central", _d),
   r"\chi_n^{\Delta,gr}(D^{gr})=\sum_{i=0}^{n}\chi_{(n-i),(i)}", hi=5)

# C_k^gr -----------------------------------------------------------------------
fx("Ckgr.central", "Ckgr", "generators", gens("central", space=["y1", "z1"]),
   r"C^{gr}(C_k^{gr})=\langle y_1,z_1\rangle_{T_2}", params=K2G, hi=5)
_c = S(0, sub(k, 1), C(n, i))
fx("Ckgr.codim", "Ckgr", "codim", _c, r"c_n^{gr}(C_k^{gr})=\sum_{i=0}^{k-1}\binom{n}{i}", params=K2G)
fx("Ckgr.central-codim", "Ckgr", "central-codim", 0, r"c_n^{z,gr}(C_k^{gr})=0", params=K2G)
fx("Ckgr.delta", "Ckgr", "delta", _c, r"\delta_n^{gr}(C_k^{gr})=\sum_{i=0}^{k-1}\binom{n}{i}", params=K2G)
_cc = S(0, sub(k, 1), chi([sub(n, i)], [i]))
fx("Ckgr.cochar", "Ckgr", "cochar", cochar("graded", _cc),
   r"\chi_n^{gr}(C_k^{gr})=\sum_{i=0}^{k-1}\chi_{(n-i),(i)}", params={"k": [2, 3]}, hi=5)
fx("Ckgr.cochar-central", "Ckgr", "cochar", cochar("central", ZERO_CHAR), r"\chi_n^{z,gr}(C_k^{gr})=0",
   params={"k": [2, 3]}, hi=5)
fx("Ckgr.cochar-proper", "Ckgr", "cochar", cochar("proper-central", _cc),
   r"\chi_n^{\Delta,gr}(C_k^{gr})=\sum_{i=0}^{k-1}\chi_{(n-i),(i)}", params={"k": [2, 3]}, hi=5)

# UT2 (trivial grading) --------------------------------------------------------
fx("UT2.identities", "UT2", "generators", gens("identities", ["[y1,y2][y3,y4]", "z1"]),
   r"\mathrm{Id}^{gr}(UT_2)=\langle [y_1,y_2][y_3,y_4],z_1\rangle_{T_2}", hi=5)
fx("UT2.central", "UT2", "generators", gens("central", ["[y1,y2][y3,y4]", "z1"]),
   r"C^{gr}(UT_2)=\mathrm{Id}^{gr}(UT_2)", hi=5)
_u = add(mul(pw(2, sub(n, 1)), sub(n, 2)), 2)
fx("UT2.codim", "UT2", "codim", _u, r"c_n^{gr}(UT_2)=2^{n-1}(n-2)+2")
fx("UT2.central-codim", "UT2", "central-codim", _u, r"c_n^{z,gr}(UT_2)=2^{n-1}(n-2)+2")
fx("UT2.delta", "UT2", "delta", 0, r"\delta_n^{gr}(UT_2)=0")
_uc = add(chi([n]),
          S(1, n, mul(sub(n, sub(mul(2, i), 1)), chi([sub(n, i), i]))),
          S(1, n, mul(sub(n, mul(2, i)), chi([sub(sub(n, i), 1), i, 1]))))
_ua = (r"\chi_{(n),\emptyset}+\sum_{i\ge1}(n-2i+1)\chi_{(n-i,i),\emptyset}"
       r"+\sum_{i\ge1}(n-2i)\chi_{(n-i-1,i,1),\emptyset}")
fx("UT2.cochar", "UT2", "cochar", cochar("graded", _uc), r"\chi_n^{gr}(UT_2)=" + _ua, hi=5)
fx("UT2.cochar-central", "UT2", "cochar", cochar("central", _uc), r"\chi_n^{z,gr}(UT_2)=" + _ua, hi=5)
fx("UT2.cochar-proper", "UT2", "cochar", cochar("proper-central", ZERO_CHAR),
   r"\chi_n^{\Delta,gr}(UT_2)=0", hi=5)

# UT2^gr -----------------------------------------------------------------------
fx("UT2gr.identities", "UT2gr", "generators", gens("identities", ["z1z2"]),
   r"\mathrm{Id}^{gr}(UT_2^{gr})=\langle z_1z_2\rangle_{T_2}", hi=5, status="suspect")
fx("UT2gr.central", "UT2gr", "generators", gens("central", ["[y1,y2]", "z1z2"]),
   r"C^{gr}(UT_2^{gr})=\mathrm{Id}^{gr}(UT_2^{gr})", hi=5)
_ug = add(1, mul(n, pw(2, sub(n, 1))))
fx("UT2gr.codim", "UT2gr", "codim", _ug, r"c_n^{gr}(UT_2^{gr})=1+n2^{n-1}")
fx("UT2gr.central-codim", "UT2gr", "central-codim", _ug, r"c_n^{z,gr}(UT_2^{gr})=1+n2^{n-1}")
fx("UT2gr.delta", "UT2gr", "delta", 0, r"\delta_n^{gr}(UT_2^{gr})=0")
_ugc = add(chi([n]), S(1, n, mul(sub(n, mul(2, i)), chi([sub(sub(n, i), 1), i], [1]))))
_uga = r"\chi_{(n),\emptyset}+\sum_{i\ge1}(n-2i)\chi_{(n-i-1,i),(1)}"
fx("UT2gr.cochar", "UT2gr", "cochar", cochar("graded", _ugc), r"\chi_n^{gr}(UT_2^{gr})=" + _uga,
   hi=5, status="suspect")
fx("UT2gr.cochar-central", "UT2gr", "cochar", cochar("central", _ugc),
   r"\chi_n^{z,gr}(UT_2^{gr})=" + _uga, hi=5, status="suspect")
fx("UT2gr.cochar-proper", "UT2gr", "cochar", cochar("proper-central", ZERO_CHAR),
   r"\chi_n^{\Delta,gr}(UT_2^{gr})=0", hi=5)

# A_k, B_k (trivial grading) -------------------------------------------------------
_ak = add(1, S(0, {"min": [sub(k, 2), sub(n, 1)]}, mul(C(n, i), sub(sub(n, i), 1))))
_akc = add(chi([n]),
           S(1, sub(k, 1), mul(sub(k, i), chi([sub(n, i), i]))),
           S(1, sub(k, 2), mul(sub(sub(k, i), 1), chi([sub(sub(n, i), 1), i, 1]))))
_aka = (r"\chi_{(n)}+\sum_{i=1}^{k-1}(k-i)\chi_{(n-i,i)}"
        r"+\sum_{i=1}^{k-2}(k-i-1)\chi_{(n-i-1,i,1)}")
for X, word in (("Ak", "[y1,y2]{word:y:3:k+1}"), ("Bk", "{word:y:3:k+1}[y1,y2]")):
    tex = X[0] + "_k"
    ids = ["[y1,y2][y3,y4]", word, "z1"]
    texids = (r"[y_1,y_2]y_3\cdots y_{k+1}" if X == "Ak" else r"y_3\cdots y_{k+1}[y_1,y_2]")
    fx(f"{X}.identities", X, "generators", gens("identities", ids),
       rf"\mathrm{{Id}}^{{gr}}({tex})=\langle [y_1,y_2][y_3,y_4],{texids},z_1\rangle_{{T_2}}",
       params=K2, hi=5)
    fx(f"{X}.central", X, "generators", gens("central", ids),
       rf"C^{{gr}}({tex})=\mathrm{{Id}}^{{gr}}({tex})", params=K2, hi=5)
    fx(f"{X}.codim", X, "codim", _ak,
       rf"c_n^{{gr}}({tex})=1+\sum_{{i=0}}^{{k-2}}\binom{{n}}{{i}}(n-i-1)", params=K2)
    fx(f"{X}.central-codim", X, "central-codim", _ak,
       rf"c_n^{{z,gr}}({tex})=1+\sum_{{i=0}}^{{k-2}}\binom{{n}}{{i}}(n-i-1)", params=K2)
    fx(f"{X}.delta", X, "delta", 0, rf"\delta_n^{{gr}}({tex})=0", params=K2)
    fx(f"{X}.cochar", X, "cochar", cochar("graded", _akc), rf"\chi_n^{{gr}}({tex})=" + _aka,
       params=K2, lo=k, hi=5)
    fx(f"{X}.cochar-central", X, "cochar", cochar("central", _akc), rf"\chi_n^{{z,gr}}({tex})=" + _aka,
       params=K2, lo=k, hi=5)
    fx(f"{X}.cochar-proper", X, "cochar", cochar("proper-central", ZERO_CHAR),
       rf"\chi_n^{{\Delta,gr}}({tex})=0", params=K2, hi=5)

# A_k^gr, B_k^gr ---------------------------------------------------------------------
_akg = add(1, S(0, sub(k, 2), mul(C(n, i), sub(n, i))))
_akgc = add(chi([n]), S(0, sub(k, 2), mul(sub(sub(k, i), 1), chi([sub(sub(n, i), 1), i], [1]))))
_akga = r"\chi_{(n),\emptyset}+\sum_{i=0}^{k-2}(k-i-1)\chi_{(n-i-1,i),(1)}"
for X, word in (("Akgr", "z1{word:y:2:k}"), ("Bkgr", "{word:y:2:k}z1")):
    tex = X[0] + "_k^{gr}"
    ids = ["[y1,y2]", word, "z1z2"]
    texids = r"z_1y_2\cdots y_k" if X == "Akgr" else r"y_2\cdots y_kz_1"
    fx(f"{X}.identities", X, "generators", gens("identities", ids),
       rf"\mathrm{{Id}}^{{gr}}({tex})=\langle [y_1,y_2],{texids},z_1z_2\rangle_{{T_2}}", params=K2, hi=5)
    fx(f"{X}.central", X, "generators", gens("central", ids),
       rf"C^{{gr}}({tex})=\mathrm{{Id}}^{{gr}}({tex})", params=K2, hi=5)
    fx(f"{X}.codim", X, "codim", _akg,
       rf"c_n^{{gr}}({tex})=1+\sum_{{i=0}}^{{k-2}}\binom{{n}}{{i}}(n-i)", params=K2)
    fx(f"{X}.central-codim", X, "central-codim", _akg,
       rf"c_n^{{z,gr}}({tex})=1+\sum_{{i=0}}^{{k-2}}\binom{{n}}{{i}}(n-i)", params=K2)
    fx(f"{X}.delta", X, "delta", 0, rf"\delta_n^{{gr}}({tex})=0", params=K2)
    fx(f"{X}.cochar", X, "cochar", cochar("graded", _akgc), rf"\chi_n^{{gr}}({tex})=" + _akga,
       params=K2, lo=km1, hi=5)
    fx(f"{X}.cochar-central", X, "cochar", cochar("central", _akgc),
       rf"\chi_n^{{z,gr}}({tex})=" + _akga, params=K2, lo=km1, hi=5)
    fx(f"{X}.cochar-proper", X, "cochar", cochar("proper-central", ZERO_CHAR),
       rf"\chi_n^{{\Delta,gr}}({tex})=0", params=K2, hi=5)

# N_k (trivial grading), k >= 3 -------------------------------------------------------
fx("Nk.identities", "Nk", "generators",
   gens("identities", ["[{list:y:1:k}]", "[y1,y2][y3,y4]", "z1"]),
   r"\mathrm{Id}^{gr}(N_k)=\langle [y_1,\dots,y_k],[y_1,y_2][y_3,y_4],z_1\rangle_{T_2}", params=K3, hi=5)
fx("Nk.central", "Nk", "generators",
   gens("central", ["[{list:y:1:k-1}]", "[y1,y2][y3,y4]", "z1"]),
   r"C^{gr}(N_k)=\mathrm{Id}^{gr}(N_{k-1})", params=K3, hi=5)
fx("Nk.central-kernel", "Nk", "kernel-equality",
   {"left": {"algebra": {"name": "Nk", "params": {"k": k}}, "kind": "central"},
    "right": {"algebra": {"name": "Nk", "params": {"k": km1}}, "kind": "identity"}, "equal": True},
   r"C^{gr}(N_k)\cap P_n=\mathrm{Id}^{gr}(N_{k-1})\cap P_n", params=K3, hi=5)
fx("Nk.central-ideal", "Nk", "closure", {"holds": True},
   r"C^{gr}(N_k)\ \text{is a }T_2\text{-ideal}", params=K3, hi=4)
_nk = lambda kk: add(1, S(2, sub(kk, 1), mul(C(n, i), sub(i, 1))))
fx("Nk.codim", "Nk", "codim", _nk(k), r"c_n^{gr}(N_k)=1+\sum_{i=2}^{k-1}\binom{n}{i}(i-1)", params=K3)
fx("Nk.central-codim", "Nk", "central-codim", _nk(km1),
   r"c_n^{z,gr}(N_k)=1+\sum_{i=2}^{k-2}\binom{n}{i}(i-1)", params=K3)
fx("Nk.delta", "Nk", "delta", mul(C(n, km1), sub(k, 2)), r"\delta_n^{gr}(N_k)=\binom{n}{k-1}(k-2)",
   params=K3)
_nkc = lambda kk: add(chi([n]), S(1, sub(kk, 2), mul(sub(sub(kk, i), 1),
                                                   add(chi([sub(n, i), i]), chi([sub(sub(n, i), 1), i, 1])))))
fx("Nk.cochar", "Nk", "cochar", cochar("graded", _nkc(k)),
   r"\chi_n^{gr}(N_k)=\chi_{(n)}+\sum_{i=1}^{k-2}(k-i-1)(\chi_{(n-i,i)}+\chi_{(n-i-1,i,1)})",
   params=K3, lo=k, hi=5)
fx("Nk.cochar-central", "Nk", "cochar", cochar("central", _nkc(km1)),
   r"\chi_n^{z,gr}(N_k)=\chi_{(n)}+\sum_{i=1}^{k-3}(k-i-2)(\chi_{(n-i,i)}+\chi_{(n-i-1,i,1)})",
   params=K3, lo=k, hi=5)
fx("Nk.cochar-proper", "Nk", "cochar",
   cochar("proper-central", S(1, sub(k, 2), add(chi([sub(n, i), i]), chi([sub(sub(n, i), 1), i, 1])))),
   r"\chi_n^{\Delta,gr}(N_k)=\sum_{i=1}^{k-2}(\chi_{(n-i,i)}+\chi_{(n-i-1,i,1)})", params=K3, lo=k, hi=5)

# N_k^gr, k >= 3 -----------------------------------------------------------------------
fx("Nkgr.identities", "Nkgr", "generators",
   gens("identities", ["[y1,y2]", "[z1,{list:y:1:k-1}]", "z1z2"]),
   r"\mathrm{Id}^{gr}(N_k^{gr})=\langle [y_1,y_2],[z_1,y_1,\dots,y_{k-1}],z_1z_2\rangle_{T_2}",
   params=K3, hi=5)
fx("Nkgr.central", "Nkgr", "generators",
   gens("central", ["[y1,y2]", "[z1,{list:y:1:k-2}]", "z1z2"]),
   r"C^{gr}(N_k^{gr})=\mathrm{Id}^{gr}(N_{k-1}^{gr})", params=K3, hi=5)
fx("Nkgr.central-kernel", "Nkgr", "kernel-equality",
   {"left": {"algebra": {"name": "Nkgr", "params": {"k": k}}, "kind": "central"},
    "right": {"algebra": {"name": "Nkgr", "params": {"k": km1}}, "kind": "identity"}, "equal": True},
   r"C^{gr}(N_k^{gr})\cap P_n=\mathrm{Id}^{gr}(N_{k-1}^{gr})\cap P_n", params=K3, hi=5)
fx("Nkgr.central-ideal", "Nkgr", "closure", {"holds": True},
   r"C^{gr}(N_k^{gr})\ \text{is a }T_2\text{-ideal}", params=K3, hi=4)
_nkg = lambda kk: add(1, S(1, sub(kk, 1), mul(C(n, i), i)))
fx("Nkgr.codim", "Nkgr", "codim", _nkg(k), r"c_n^{gr}(N_k^{gr})=1+\sum_{i=1}^{k-1}\binom{n}{i}i", params=K3)
fx("Nkgr.central-codim", "Nkgr", "central-codim", _nkg(km1),
   r"c_n^{z,gr}(N_k^{gr})=1+\sum_{i=1}^{k-2}\binom{n}{i}i", params=K3)
fx("Nkgr.delta", "Nkgr", "delta", mul(C(n, km1), km1), r"\delta_n^{gr}(N_k^{gr})=\binom{n}{k-1}(k-1)",
   params=K3)
fx("Nkgr.cochar", "Nkgr", "cochar", cochar("graded", _akgc),
   r"\chi_n^{gr}(N_k^{gr})=\chi_{(n),\emptyset}+\sum_{i=0}^{k-2}(k-i-1)\chi_{(n-i-1,i),(1)}",
   params=K3, lo=k, hi=5)
fx("Nkgr.cochar-central", "Nkgr", "cochar",
   cochar("central", add(chi([n]), S(0, sub(k, 3), mul(sub(sub(k, i), 2), chi([sub(sub(n, i), 1), i], [1]))))),
   r"\chi_n^{z,gr}(N_k^{gr})=\chi_{(n),\emptyset}+\sum_{i=0}^{k-3}(k-i-2)\chi_{(n-i-1,i),(1)}",
   params=K3, lo=k, hi=5)
fx("Nkgr.cochar-proper", "Nkgr", "cochar",
   cochar("proper-central", S(0, sub(k, 2), chi([sub(sub(n, i), 1), i], [1]))),
   r"\chi_n^{\Delta,gr}(N_k^{gr})=\sum_{i=0}^{k-2}\chi_{(n-i-1,i),(1)}", params=K3, lo=k, hi=5)

# G_2k (trivial grading) -------------------------------------------------------------
G2K = {"name": "Gt", "params": {"t": mul(2, k)}}
BK = {"k": [1, 2]}


def gfx(id, kind, formula, anchor, hi=6, bind=BK, algebra=G2K):
    fx(id, algebra["name"], kind, formula, anchor, params=algebra["params"], hi=hi, bind=bind)


gfx("G2k.identities", "generators",
    gens("identities", ["[y1,y2,y3]", "{pairs:1:k+1}", "z1"]),
    r"\mathrm{Id}^{gr}(G_{2k})=\langle [y_1,y_2,y_3],[y_1,y_2]\cdots[y_{2k+1},y_{2k+2}],z_1\rangle_{T_2}",
    hi=5)
gfx("G2k.central", "generators",
    gens("central", ["z1"], ["[y1,y2]", "y0[y1,y2,y3]", "y0{pairs:1:k}"]),
    r"C^{gr}(G_{2k})=\langle z_1\rangle_{T_2}+\langle [y_1,y_2],y_0[y_1,y_2,y_3],"
    r"y_0[y_1,y_2]\cdots[y_{2k-1},y_{2k}]\rangle_{T_2}^{S}", hi=5)
gfx("G2k.codim", "codim", S(0, k, C(n, mul(2, i))), r"c_n^{gr}(G_{2k})=\sum_{i=0}^{k}\binom{n}{2i}")
gfx("G2k.central-codim", "central-codim", S(0, sub(k, 1), C(sub(n, 1), mul(2, i))),
    r"c_n^{z,gr}(G_{2k})=\sum_{i=0}^{k-1}\binom{n-1}{2i}")
gfx("G2k.delta", "delta", add(C(n, mul(2, k)), S(0, sub(k, 2), C(sub(n, 1), add(mul(2, i), 1)))),
    r"\delta_n^{gr}(G_{2k})=\binom{n}{2k}+\sum_{i=0}^{k-2}\binom{n-1}{2i+1}")
gfx("G2k.cochar", "cochar", cochar("graded", S(0, mul(2, k), chi([sub(n, i), ones(i)]))),
    r"\chi_n^{gr}(G_{2k})=\sum_{i=0}^{2k}\chi_{(n-i,1^i),\emptyset}", hi=5)
gfx("G2k.cochar-central", "cochar",
    cochar("central", S(0, sub(k, 1), chi([sub(n, mul(2, i)), ones(mul(2, i))]))),
    r"\chi_n^{z,gr}(G_{2k})=\sum_{i=0}^{k-1}\chi_{(n-2i,1^{2i}),\emptyset}", hi=5)
gfx("G2k.cochar-proper", "cochar",
    cochar("proper-central", add(chi([sub(n, mul(2, k)), ones(mul(2, k))]),
                                 S(0, sub(k, 1), chi([sub(sub(n, mul(2, i)), 1), ones(add(mul(2, i), 1))])))),
    r"\chi_n^{\Delta,gr}(G_{2k})=\chi_{(n-2k,1^{2k}),\emptyset}"
    r"+\sum_{i=0}^{k-1}\chi_{(n-2i-1,1^{2i+1}),\emptyset}", hi=5)

# G_t^gr ---------------------------------------------------------------------------
GT = {"t": [1, 2, 3, 4]}
fx("Gtgr.identities", "Gtgr", "generators",
   gens("identities", ["[y1,y2]", "[y1,z1]", "z1 o z2", "{word:z:1:t+1}"]),
   r"\mathrm{Id}^{gr}(G_t^{gr})=\langle [y_1,y_2],[y_1,z_1],z_1\circ z_2,z_1\cdots z_{t+1}\rangle_{T_2}",
   params=GT, hi=5)
fx("Gtgr.central", "Gtgr", "generators",
   gens("central", ["[y1,y2]", "[y1,z1]", "z1 o z2", "{word:z:1:t+1}"], ["y1", "{word:z:1:t}"]),
   r"C^{gr}(G_t^{gr})=\mathrm{Id}^{gr}(G_t^{gr})+\langle y_1,z_1\cdots z_t\rangle_{T_2}^{S}",
   params=GT, hi=5)
fx("Gtgr.codim", "Gtgr", "codim", S(0, t, C(n, i)), r"c_n^{gr}(G_t^{gr})=\sum_{i=0}^{t}\binom{n}{i}",
   params=GT)
fx("Gtgr.cochar", "Gtgr", "cochar", cochar("graded", S(0, t, chi([sub(n, i)], [ones(i)]))),
   r"\chi_n^{gr}(G_t^{gr})=\sum_{i=0}^{t}\chi_{(n-i),(1^i)}", params=GT, hi=5)
GE = {"name": "Gtgr", "params": {"t": mul(2, k)}}
GO = {"name": "Gtgr", "params": {"t": add(mul(2, k), 1)}}
_odd = lambda body: S(1, mul(2, k), body, step=2)
_even = lambda body: S(0, mul(2, k), body, step=2)
for X, alg, tex in (("G2kgr", GE, "G_{2k}^{gr}"), ("G2k1gr", GO, "G_{2k+1}^{gr}")):
    gfx(f"{X}.central-codim", "central-codim", _odd(C(n, i)),
        rf"c_n^{{z,gr}}({tex})=\sum_{{1\le i\le 2k,\ i\ \mathrm{{odd}}}}\binom{{n}}{{i}}", algebra=alg)
    gfx(f"{X}.cochar-central", "cochar", cochar("central", _odd(chi([sub(n, i)], [ones(i)]))),
        rf"\chi_n^{{z,gr}}({tex})=\sum_{{1\le i\le 2k,\ i\ \mathrm{{odd}}}}\chi_{{(n-i),(1^i)}}",
        algebra=alg, hi=5)
gfx("G2kgr.delta", "delta", _even(C(n, i)),
    r"\delta_n^{gr}(G_{2k}^{gr})=\sum_{0\le i\le 2k,\ i\ \mathrm{even}}\binom{n}{i}", algebra=GE)
gfx("G2k1gr.delta", "delta", add(C(n, add(mul(2, k), 1)), _even(C(n, i))),
    r"\delta_n^{gr}(G_{2k+1}^{gr})=\binom{n}{2k+1}+\sum_{0\le i\le 2k,\ i\ \mathrm{even}}\binom{n}{i}",
    algebra=GO)
gfx("G2kgr.cochar-proper", "cochar", cochar("proper-central", _even(chi([sub(n, i)], [ones(i)]))),
    r"\chi_n^{\Delta,gr}(G_{2k}^{gr})=\sum_{0\le i\le 2k,\ i\ \mathrm{even}}\chi_{(n-i),(1^i)}",
    algebra=GE, hi=5)
gfx("G2k1gr.cochar-proper", "cochar",
    cochar("proper-central", add(chi([sub(sub(n, mul(2, k)), 1)], [ones(add(mul(2, k), 1))]),
                                 _even(chi([sub(n, i)], [ones(i)])))),
    r"\chi_n^{\Delta,gr}(G_{2k+1}^{gr})=\chi_{(n-2k-1),(1^{2k+1})}"
    r"+\sum_{0\le i\le 2k,\ i\ \mathrm{even}}\chi_{(n-i),(1^i)}", algebra=GO, hi=5)
gfx("G2kgr.central-kernel", "kernel-equality",
    {"left": {"algebra": GE, "kind": "central"}, "right": {"algebra": GO, "kind": "central"}, "equal": True},
    r"C^{gr}(G_{2k}^{gr})=C^{gr}(G_{2k+1}^{gr})", algebra=GE, hi=5)
gfx("G2kgr.identity-kernel", "kernel-equality",
    {"left": {"algebra": GE, "kind": "identity"}, "right": {"algebra": GO, "kind": "identity"}, "equal": False},
    r"\mathrm{Id}^{gr}(G_{2k}^{gr})\neq\mathrm{Id}^{gr}(G_{2k+1}^{gr})", algebra=GE, hi=5)


def main():
    ids = [f["id"] for f in FIX]
    assert len(ids) == len(set(ids)), "duplicate fixture ids"
    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text(json.dumps({"fixtures": FIX}, indent=1, sort_keys=True) + "\n")
    print(f"wrote {len(FIX)} fixtures to {OUT}")


if __name__ == "__main__":
    main()
