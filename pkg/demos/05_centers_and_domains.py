"""Where a coevent behaves classically.

The center of phi collects the events that split every truth value:
phi(B) = phi(B & A) xor phi(B & A'). It is always a subalgebra and phi
restricts additively to it. A classical domain is a maximal subalgebra
on which phi is a homomorphism with the subalgebra's top as unit.
"""

from qmeasure import OutcomeSpace, center, center_subdomains, classical_domains, parse_coevent

space = OutcomeSpace(3)


def show(label: str, text: str) -> None:
    phi = parse_coevent(space, text)
    z = center(phi)
    print(f"{label} = {phi.format()}")
    print(f"  center: {[e.format() or 'empty' for e in z.members]}")
    domains = classical_domains(phi)
    for k, dom in enumerate(domains, start=1):
        members = [e.format() or "empty" for e in dom.members]
        print(f"  domain {k}: {members}")
    print()


show("phi", "1,2")
show("psi", "1;2")
show("gamma", "1;2;3")
show("delta", "1,2,3")

# gamma's center is everything, yet inside it only three tiny subalgebras
# carry a unital restriction; the maximal domains each extend one of them
gamma = parse_coevent(space, "1;2;3")
subs = center_subdomains(gamma)
print("unital center subdomains of gamma:")
for sub in subs:
    print(f"  {[e.format() or 'empty' for e in sub.members]}")
