"""Which motions of the plane preserve which metrics.

Translations and the named reflections preserve all three plane metrics;
full rotational symmetry is what singles out the Euclidean distance.
"""

import math

import numpy as np
from scipy.stats import ortho_group

import metrikos as mk
from metrikos.sampling import random_points, random_sphere_points

rng = np.random.default_rng(2)
sample = list(random_points(rng, 24, low=-3, high=3))
sample += [(0.0, 0.0), (1.0, 0.0)]

maps = [
    ("translation(1.5, -2)", mk.translation(1.5, -2.0)),
    ("reflect origin", mk.reflect_origin()),
    ("reflect x1", mk.reflect_x1()),
    ("reflect x2", mk.reflect_x2()),
    ("swap axes", mk.swap_axes()),
    ("rotation(pi/4)", mk.rotation(math.pi / 4)),
]
metrics = [mk.Euclidean(), mk.Taxicab(), mk.Chebyshev()]

print(f"{'map':<22}" + "".join(f"{m.name:>12}" for m in metrics))
for label, m in maps:
    row = []
    for metric in metrics:
        ok, _ = mk.is_isometry(m, metric, sample)
        row.append("yes" if ok else "NO")
    print(f"{label:<22}" + "".join(f"{v:>12}" for v in row))

ok, witness = mk.is_isometry(mk.rotation(math.pi / 4), mk.Taxicab(), sample)
print()
print("the eighth turn breaks the taxicab metric; one witness pair:")
print(f"  {witness.x} and {witness.y}: {witness.before:g} before, {witness.after:.6f} after")

# Reflections about any point reduce to the origin flip plus translations.
a = (0.75, -1.25)
composed = mk.compose(mk.translation(2 * a[0], 2 * a[1]), mk.reflect_origin())
direct = mk.reflect_about_point(*a)
print()
print("reflection about", a, "equals flip-then-translate:",
      bool(np.array_equal(composed.linear, direct.linear)
           and np.array_equal(composed.offset, direct.offset)))

# On the sphere every rotation or mirror through the center preserves both
# the chord and the arc, and they suffice to move any point anywhere.
sphere_sample = list(random_sphere_points(rng, 12))
all_ok = all(
    mk.is_isometry(mk.SphereMap(ortho_group.rvs(3, random_state=k)), mk.GreatCircle(), sphere_sample)[0]
    for k in range(25)
)
print()
print("25 random orthogonal maps preserve the great-circle metric:", all_ok)

p, q = random_sphere_points(rng, 2)
mover = mk.rotation_sending(p, q)
print("constructed rotation carries p onto q:",
      bool(np.allclose(mk.apply_map(mover, p), q, atol=1e-12)))
