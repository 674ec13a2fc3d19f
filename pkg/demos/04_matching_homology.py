"""The finite complex lab: matching complexes of paths and cycles and
their exact integer homology.

Run:  python3 demos/04_matching_homology.py
"""

from braidedthompson import (d_matching_cyclic, d_matching_linear,
                             reduced_homology, restrict_initial,
                             simplex_counts)

# Interval matchings on a path: vertex v is the length-(d-1) interval
# starting at position v+1; faces are disjoint systems.
k = d_matching_linear(3, 9)
print("ternary matchings of the 9-path: %d vertices, dimension %d"
      % (k.vertices, k.dim))
print("face counts by dimension:", simplex_counts(3, 9))
print("homology:", reduced_homology(k))

# The 2-matching complexes of paths follow a 3-periodic pattern of
# contractible spaces and spheres.
print("\nlinear 2-matching complexes:")
for m in range(2, 13):
    print("  m = %2d:" % m, reduced_homology(d_matching_linear(2, m)))

# Cyclic variants wrap around, and initial positions can be restricted.
c = d_matching_cyclic(2, 8)
print("\ncyclic 2-matchings on the 8-cycle:", reduced_homology(c))
r = restrict_initial(c, {1, 3, 5, 7})
print("restricted to odd initial positions:", reduced_homology(r))
