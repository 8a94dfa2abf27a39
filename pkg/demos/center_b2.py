"""The centre of U_q^+(B2): z, z', the conjugation identities for e3bar and
the torus identity for e2, checked by normal forms."""

from uqplus.pbw import builtin_presentation, is_central, paper_identity, q_normality

b = builtin_presentation("b2")
for name in ("z", "zp"):
    x = b.element(name)
    print(f"{name} = {x.format()}   central: {is_central(x)}")

w = b.named_element("w")
print("w is not normal:", q_normality(w).to_dict()["residuals"])

for n in ("e2_e3bar", "zprime_via_e3bar", "torus_identity_1", "torus_identity_1_derivation",
          "torus_identity_1_corrected", "s_equals_minus_qm2_z", "pi_zprime"):
    r = paper_identity(n)
    print(f"{'ok  ' if r.ok else 'FAIL'} {r.label}")
    if not r.ok:
        print("     ", r.detail)
