#!/usr/bin/env python3
"""Generates include/znt/oracle_values.hpp with high-precision reference values.

Values come from mpmath at 40 digits and are frozen into the header; the
C++ tests assert against them at the tolerances stated in each suite.
"""
import mpmath as mp

mp.mp.dps = 40

out = []
out.append("#pragma once")
out.append("// Auto-generated by tests/oracle/gen_oracle.py -- do not edit by hand.")
out.append("")
out.append("namespace oracle {")
out.append("")

# First 100 ordinates of critical-line zeros.
zeros = [mp.im(mp.zetazero(k)) for k in range(1, 101)]
out.append("inline constexpr double kZeroOrdinates[100] = {")
for i in range(0, 100, 4):
    row = ", ".join(mp.nstr(z, 17) for z in zeros[i:i + 4])
    out.append("    " + row + ",")
out.append("};")
out.append("")

def emit(name, val, digits=17):
    out.append(f"inline constexpr double {name} = {mp.nstr(val, digits)};")

emit("kZetaHalf", mp.zeta(mp.mpf("0.5")))
emit("kZetaLogDeriv2", mp.zeta(2, derivative=1) / mp.zeta(2))
emit("kZ_17_8455995", mp.siegelz(mp.mpf("17.8455995")))

d = mp.digamma(mp.mpc(0.25, 50))
emit("kDigammaQ50i_re", mp.re(d))
emit("kDigammaQ50i_im", mp.im(d))

# Spot values of zeta in the critical strip for validating Euler-Maclaurin.
spots = [mp.mpc(0.75, 100), mp.mpc(0.5, 250), mp.mpc(1.5, 1000), mp.mpc(0.6, 37.5)]
out.append("")
out.append("// {re(s), im(s), re(zeta), im(zeta)}")
out.append("inline constexpr double kZetaSpots[4][4] = {")
for s in spots:
    z = mp.zeta(s)
    out.append("    {%s, %s, %s, %s}," % (
        mp.nstr(mp.re(s), 17), mp.nstr(mp.im(s), 17),
        mp.nstr(mp.re(z), 17), mp.nstr(mp.im(z), 17)))
out.append("};")
out.append("")

# zeta'/zeta spot values (method check for the derivative path).
out.append("// {re(s), im(s), re(z'/z), im(z'/z)}")
out.append("inline constexpr double kZetaLogDerivSpots[3][4] = {")
for s in [mp.mpc(2, 100), mp.mpc(0.75, 55.5), mp.mpc(1.2, 333)]:
    z = mp.zeta(s, derivative=1) / mp.zeta(s)
    out.append("    {%s, %s, %s, %s}," % (
        mp.nstr(mp.re(s), 17), mp.nstr(mp.im(s), 17),
        mp.nstr(mp.re(z), 17), mp.nstr(mp.im(z), 17)))
out.append("};")
out.append("")
out.append("} // namespace oracle")

open("/root/proj/include/znt/oracle_values.hpp", "w").write("\n".join(out) + "\n")
print("wrote include/znt/oracle_values.hpp")
