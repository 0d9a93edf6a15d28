"""Regenerate src/borosmoll/data/polynomials.txt from the printed forms below.

Each entry is the polynomial exactly as typeset (grouping and factoring kept),
written in Python syntax over the variables ``m`` and ``i``.  Univariate
entries (``g``, ``f``) use ``m`` as their variable.

    python tools/transcribe_polynomials.py
"""

from pathlib import Path

from borosmoll.polys import I, M, PolyTable

# first factor shared by K, L and the R/R1/M1/G1 family
_Q = "(2*i**4+4*i**3*m+2*i**2*m**2+10*i**3+14*i**2*m+6*i*m**2+2*m**3+17*i**2+21*i*m+12*m**2+10*i+18*m)"
_L0 = (
    "(-4*i**3*m-8*i**2*m**2-4*i*m**3-20*i**2*m-24*i*m**2-4*m**3+7*i**2-28*i*m-19*m**2+20*i-20*m+7)"
)
_L1 = "(2*i**2*m+4*i*m**2+2*m**3+i**2+24*m+14*i*m+13*m**2+6*i+9)"

PRINTED = {
    "D": "6*m**2*i+2*m**2*i**2+21*m*i+14*m*i**2+4*m*i**3+10*i+17*i**2+10*i**3+2*i**4+2*m**3+12*m**2+18*m",
    "E_sec3": (
        "4*i**2*(i**2-2*m**2)*(i+m)**2 + 2*(i+m)*(10*i**4-4*m**4-9*i*m**3-27*i**2*m**2-4*i**3*m)"
        " + 27*i**4 - 55*i**3*m - 175*i**2*m**2 - 139*i*m**3 - 62*m**4 - 16*i**3 - 155*i**2*m"
        " - 229*i*m**2 - 162*m**3 - 60*i**2 - 142*i*m - 162*m**2 - 30*i - 54*m"
    ),
    "F": (
        "32*i**2*m**2*(i-m)*(i+m)**3 + 16*m*(4*i**4+10*i**3*m-14*i**2*m**2-3*i*m**3-2*m**4)*(i+m)**2"
        " + 2*(i+m)*(-152*m**5-250*i*m**4-377*i**2*m**3+111*i**3*m**2+181*i**4*m+15*i**5)"
        " + 168*i**5 + 694*i**4*m - 280*i**3*m**2 - 2052*i**2*m**3 - 2160*i*m**4 - 1106*m**5 + 273*i**4"
        " - i**3*m - 1809*i**2*m**2 - 2831*i*m**3 - 1968*m**4 + 18*i**3 - 898*i**2*m - 1936*i*m**2"
        " - 1836*m**3 - 207*i**2 - 663*i*m - 864*m**2 - 90*i - 162*m"
    ),
    "G": (
        "m**2*(2*i**3-m**2)**2 + (56*i**6*m-24*i**3*m**3) + (20*i**5*m**2-2*i**2*m**4)"
        " + 4*i**8 + 8*i**7*m + 40*i**7 + 169*i**6 + 166*i**5*m + 70*i**4*m**2"
    ),
    "H": (
        "1588*i**7 + 4440*i**6*m + 4768*i**5*m**2 + 2148*i**4*m**3 + 324*i**3*m**4 + 144*i**2*m**5"
        " + 104*i*m**6 + 52*m**7 + 2345*i**6 + 6666*i**5*m + 6991*i**4*m**2 + 3624*i**3*m**3"
        " + 1567*i**2*m**4 + 646*i*m**5 + 289*m**6 + 2418*i**5 + 7232*i**4*m + 8044*i**3*m**2"
        " + 5340*i**2*m**3 + 2234*i*m**4 + 892*m**5 + 1903*i**4 + 5810*i**3*m + 7225*i**2*m**2"
        " + 4104*i*m**3 + 1618*m**4 + 1086*i**3 + 3332*i**2*m + 3470*i*m**2 + 1608*m**3"
        " + 321*i**2 + 914*i*m + 657*m**2"
    ),
    "K": (
        "4*" + _Q + "*(2*i**3*m**2+2*i**2*m**3-2*i**5-2*i**4*m-9*i**4+2*i**3*m+16*i**2*m**2+6*i*m**3"
        "+m**4-7*i**3+23*i**2*m+23*i*m**2+9*m**3+12*i**2+16*i*m+20*m**2+8*i+8*m)"
    ),
    # L = L_RAT + L_SURD*sqrt(4i^2+4m+1)
    "L_RAT": "2*" + _Q + "*" + _L0,
    "L_SURD": "2*" + _Q + "*" + _L1,
    "L0": _L0,
    "L1": _L1,
    "LSQ": (
        "16*i**6*m+96*i**5*m**2+176*i**4*m**3+128*i**3*m**4+48*i**2*m**5+32*i*m**6+16*m**7"
        " + 4*i**6+264*i**5*m+972*i**4*m**2+1088*i**3*m**3+492*i**2*m**4+312*i*m**5+196*m**6"
        " + 48*i**5+1456*i**4*m+3248*i**3*m**2+2064*i**2*m**3+1184*i*m**4+960*m**5+168*i**4"
        " + 3508*i**3*m+4368*i**2*m**2+2372*i*m**3+2384*m**4+164*i**3+3876*i**2*m"
        " + 3036*i*m**2+3196*m**3-120*i**2+2164*i*m+2404*m**2-172*i+1036*m+32"
    ),
    "R": "2*i**2*m**2+4*m*i**3+6*i*m**2+14*m*i**2+2*i**4+10*i**3+21*m*i+17*i**2+2*m**3+12*m**2+18*m+10*i",
    "S": (
        "4*i**2*(i**2-2*m**2)*(i+m)**3 + 2*(8*i**4-4*i**3*m-21*i**2*m**2-9*i*m**3-4*m**4)*(i+m)**2"
        " + (i+m)*(-54*m**4-121*i*m**3-99*i**2*m**2-41*i**3*m+7*i**4) - 41*i**4"
        " - 98*i**3*m - 187*i**2*m**2 - 262*i*m**3 - 100*m**4 - 41*i**3 - 51*i**2*m"
        " - 106*i*m**2 + 25*i**2 + 45*i*m + 108*m**2 + 30*i + 54*m"
    ),
    "T": (
        "32*i**2*m**2*(i+m)**4 + 16*m*(4*i**4+18*i**3*m+18*i**2*m**2+7*i*m**3+2*m**4)*(i+m)**2"
        " + 2*(i+m)*(120*m**5+414*i*m**4+601*i**2*m**3+523*i**3*m**2+199*i**4*m+15*i**5)"
        " + 132*i**5+850*i**4*m+1912*i**3*m**2+2652*i**2*m**3+2084*i*m**4+562*m**5+153*i**4"
        " + 417*i**3*m+983*i**2*m**2+1307*i*m**3+300*m**4-48*i**3-328*i**2*m"
        " - 248*i*m**2-432*m**3-177*i**2-405*i*m-540*m**2-90*i-162*m"
    ),
    "X": (
        "16*i**7*m**4-16*i**4*m**6+4*i*m**8 + 64*i**8*m**3-24*i**2*m**7+16*i**11+64*i**10*m + 96*i**9*m**2"
        " + (128*i**10 + 448*i**9*m + 624*i**8*m**2 + 448*i**7*m**3 + 160*i**6*m**4 - 100*i**3*m**6)"
        " + (372*i**9 + 1280*i**8*m + 1868*i**7*m**2 + 1256*i**6*m**3 + 128*i**5*m**4 - 240*i**4*m**5)"
        " + (340*i**8 + 1712*i**7*m + 2520*i**6*m**2 + 620*i**5*m**3 - 1132*i**4*m**4 - 1096*i**3*m**5"
        " - 528*i**2*m**6)"
        " + (3692*i**2*m - 52*i*m**7 - 16*m**8 - 523*i**7 - 2*i**6*m - 509*i**5*m**2"
        " - 2584*i**4*m**3 - 3749*i**3*m**4 - 2910*i**2*m**5 - 635*i*m**6 - 176*m**7 - 1416*i**6"
        " - 5048*i**3*m**3 - 5940*i**2*m**4 - 1810*i*m**5 - 656*m**6 - 586*i**5 - 3890*i**4*m"
        " - 3588*i**2*m**3 - 667*i*m**4 - 688*m**5 + 1240*i**4 + 1054*i**3*m + 2274*i**2*m**2"
        " + 3216*i*m**3 + 1104*m**4 + 1221*i**3 + 2896*i*m**2 + 2160*m**3 - 3550*i**5*m"
        " - 4508*i**4*m**2 - 268*i**2 - 2525*i**3*m**2 + 488*i*m - 432*m**2 - 524*i - 1296*m)"
    ),
    "R1": "2*i**2*m**2+4*m*i**3+6*i*m**2+14*m*i**2+2*i**4+10*i**3+21*m*i+17*i**2+2*m**3+12*m**2+18*m+10*i",
    "S1": (
        "8*i**5*m**2-4*i**2*m**4+36*i**4*m**2+12*i**3*m**3+(16*i**6*m-4*m**5)+(8*i**7-2*i*m**4)"
        " + (32*i**6+52*i**5*m+30*i**5+88*i**4*m+66*i**3*m**2-28*i**2*m**3-6*i*m**4)"
        " + (36*m-27*i**4+55*i**3*m-65*i**2*m**2-23*i*m**3-24*m**4-56*i**3"
        " - 101*i**2*m-9*i*m**2-32*m**3-9*i**2-20*i*m+24*m**2+22*i)"
    ),
    "M1": _Q,
    "N1": (
        "4*i**10*m-40*i**8*m**3-96*i**7*m**4-128*i**6*m**5-128*i**5*m**6-88*i**4*m**7-32*i**3*m**8-4*i**2*m**9"
        " + i**10+12*i**9*m-92*i**8*m**2-400*i**7*m**3-774*i**6*m**4-1100*i**5*m**5-1072*i**4*m**6"
        " - 592*i**3*m**7-171*i**2*m**8-32*i*m**9-4*m**10+6*i**9-58*i**8*m-556*i**7*m**2-1602*i**6*m**3"
        " - 3236*i**5*m**4-4334*i**4*m**5-3204*i**3*m**6-1270*i**2*m**7-322*i*m**8-48*m**9-3*i**8"
        " - 351*i**7*m-1487*i**6*m**2-4194*i**5*m**3-7663*i**4*m**4-7213*i**3*m**5-3519*i**2*m**6"
        " - 1122*i*m**7-208*m**8-87*i**7-695*i**6*m-2422*i**5*m**2-5984*i**4*m**3-6495*i**3*m**4"
        " - 3165*i**2*m**5-1272*i*m**6-336*m**7-161*i**6-399*i**5*m-1212*i**4*m**2-107*i**3*m**3"
        " + 2447*i**2*m**4+1012*i*m**5+104*m**6+87*i**5+839*i**4*m+3175*i**3*m**2+6101*i**2*m**3"
        " + 2902*i*m**4+816*m**5+377*i**4+1388*i**3*m+3137*i**2*m**2+862*i*m**3+432*m**4"
        " + 32*i**3-20*i**2*m-1308*i*m**2-432*m**3-252*i**2-720*i*m-324*m**2"
    ),
    "P": (
        "4*i**6 + (4*i**3*m**3-2*m**5) + (38*i**3*m**2-9*m**4) + (14*i**2*m**3-11*m**3) + 12*i**5*m"
        " + 18*i**5 + 44*i**4*m + (21*i**4-10*i**3) + 60*i**3*m + (35*i**2*m-21*i*m) + 12*i**4*m**2"
        " + (64*i**2*m**2-10*m**2-22*m) + 16*i*m**3 + (34*i*m**2-27*i**2-6*i)"
    ),
    "G1": _Q,
    "H1": (
        "2*i**7+4*i**6*m+7*i**6+11*i**5*m+8*i**4*m**2+14*i**3*m**3+15*i**2*m**4+3*i**4"
        " + (7*i*m**5-4*i**4*m**3) + (2*m**6-2*i**3*m**4) + 7*i**5+34*i**4*m+68*i**3*m**2+58*i**2*m**3"
        " + (29*i*m**4-10*i**2*m) + (12*m**5-12*m**3) + (61*i**3*m-14*i**2-40*i*m)"
        " + (63*i**2*m**2-25*i*m**2-18*m**2) + 21*i*m**3+16*m**4-5*i**3"
    ),
    "Y5": (
        "4*i**2*(2*m**2-i**2)*(i+m)**2 + 2*(i+m)*(4*m**4+7*i*m**3+31*i**2*m**2+4*i**3*m-12*i**4)"
        " - 35*i**4+59*i**3*m+199*i**2*m**2+151*i*m**3+82*m**4+16*i**3+181*i**2*m+321*i*m**2"
        " + 282*m**3+70*i**2+294*i*m+368*m**2+106*i+160*m"
    ),
    "Y6": (
        "(2*i**4+4*i**3*m+2*i**2*m**2+14*i**3+18*i**2*m+6*i*m**2+2*m**3+33*i**2+33*i*m+18*m**2"
        "+37*i+48*m+32)*(32*i**2*m**2*(m-i)*(i+m)**2 + 16*m*(i+m)*(2*m**4+i*m**3+16*i**2*m**2"
        "-11*i**3*m-4*i**4) - 30*i**5-394*i**4*m-110*i**3*m**2+762*i**2*m**3+300*i*m**4"
        " + 368*m**5-168*i**4-338*i**3*m+1154*i**2*m**2+558*i*m**3+1538*m**4+1028*i**2*m"
        " - 141*i**3+631*i*m**2+2882*m**3+391*i**2+639*i*m+2480*m**2+260*i+800*m)"
    ),
    "g": (
        "2048*m**12-10240*m**11+16512*m**10-3456*m**9-35232*m**8+99120*m**7+44488*m**6"
        " - 375620*m**5+431652*m**4-182601*m**3+7362*m**2+13797*m-2430"
    ),
    "f": (
        "256*m**11-4608*m**10+36544*m**9-177920*m**8+572592*m**7-1218432*m**6"
        " + 1573768*m**5-940352*m**4-66903*m**3-65525*m**2-3657*m-963"
    ),
}


def build_table() -> PolyTable:
    env = {"__builtins__": {}, "m": M, "i": I}
    return PolyTable({name: eval(expr, env) for name, expr in PRINTED.items()})


def main():
    out = Path(__file__).resolve().parents[1] / "src" / "borosmoll" / "data" / "polynomials.txt"
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(build_table().dumps())
    print(f"wrote {out}")


if __name__ == "__main__":
    main()
