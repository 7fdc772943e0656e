"""Regenerates tests/unit/oracle_values.hpp with mpmath.

    python3 tests/oracles/generate.py > tests/unit/oracle_values.hpp
"""
import mpmath as mp

mp.mp.dps = 30


def c(x):
    return "%.17g" % float(x)


def cplx(z):
    return "{%s, %s}" % (c(mp.re(z)), c(mp.im(z)))


out = []
emit = out.append
emit("#pragma once")
emit("// Generated by tests/oracles/generate.py (mpmath %s, 30 digits). Do not edit." % mp.__version__)
emit("")
emit("#include <array>")
emit("#include <complex>")
emit("")
emit("namespace oracle {")
emit("")
emit("struct ZetaJets {")
emit("  double sigma, t;")
emit("  std::array<std::complex<double>, 6> d;")
emit("};")
emit("")
points = [(2, 0), (0.6, 100), (0.5, 1000), (0.55, 1000), (0.7, 3141.5), (0.51, 5000), (0.5, 9999), (3, 42)]
emit("inline const ZetaJets kZetaJets[] = {")
for s_re, s_im in points:
    s = mp.mpc(s_re, s_im)
    ds = [mp.zeta(s, derivative=j) for j in range(6)]
    emit("    {%s, %s, {{%s}}}," % (c(s_re), c(s_im), ", ".join(cplx(d) for d in ds)))
emit("};")
emit("")

# (zeta'/zeta)^(k) via Taylor coefficients of log zeta
emit("struct LogDeriv {")
emit("  double sigma, t;")
emit("  int k;")
emit("  std::complex<double> value;")
emit("};")
emit("inline const LogDeriv kLogDerivs[] = {")
for s_re, s_im, ks in [(2, 0, [0, 1, 2]), (0.55, 50, [0, 2, 4]), (0.5 + 1 / mp.log(1000), 1000, [0, 1, 3, 5]),
                       (0.6, 14.134725141734695, [0, 2])]:
    s = mp.mpc(s_re, s_im)
    for k in ks:
        v = mp.diff(lambda x: mp.zeta(x, derivative=1) / mp.zeta(x), s, k)
        emit("    {%s, %s, %d, %s}," % (c(s_re), c(s_im), k, cplx(v)))
emit("};")
emit("")

emit("struct Pair {")
emit("  double x, y;")
emit("};")
emit("inline const Pair kTheta[] = {")
for t in [2, 10, 100, 1000, 9000]:
    emit("    {%s, %s}," % (c(t), c(mp.siegeltheta(t))))
emit("};")
emit("inline const Pair kHardyZ[] = {")
for t in [14, 15, 20, 50, 100, 1000.5]:
    emit("    {%s, %s}," % (c(t), c(mp.siegelz(t))))
emit("};")
emit("")
emit("// First 29 ordinates and a few higher ones, by index.")
emit("inline const double kFirstZeros[] = {")
for n in range(1, 30):
    emit("    %s," % c(mp.im(mp.zetazero(n))))
emit("};")
emit("struct IndexedZero {")
emit("  int index;")
emit("  double gamma;")
emit("};")
emit("inline const IndexedZero kHigherZeros[] = {")
for n in [100, 649, 1000, 2000, 4000]:
    emit("    {%d, %s}," % (n, c(mp.im(mp.zetazero(n)))))
emit("};")
emit("")

emit("// int_0^beta 1 - (sin pi u / pi u)^2 du")
emit("inline const Pair kGue[] = {")
for beta in [0.25, 1, 2, 7.5, 50]:
    f = lambda u: 1 - (mp.sinc(mp.pi * u)) ** 2
    pts = [0] + list(range(1, int(beta) + 1)) + [beta]
    emit("    {%s, %s}," % (c(beta), c(mp.quad(f, sorted(set(pts))))))
emit("};")
emit("")

emit("// int_0^1 x^(2k+1) e^(-2ax) dx + int_1^inf x^(2k) e^(-2ax) dx")
emit("struct Coefficient {")
emit("  int k;")
emit("  double a, value;")
emit("};")
emit("inline const Coefficient kCoefficientC[] = {")
for k in range(0, 9):
    for a in [0.1, 0.5, 1, 3]:
        v = mp.quad(lambda x: x ** (2 * k + 1) * mp.exp(-2 * a * x), [0, 1]) + mp.quad(
            lambda x: x ** (2 * k) * mp.exp(-2 * a * x), [1, mp.inf])
        emit("    {%d, %s, %s}," % (k, c(a), c(v)))
emit("};")
emit("")
emit("}  // namespace oracle")
print("\n".join(out))
