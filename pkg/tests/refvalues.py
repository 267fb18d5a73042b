"""Frozen self-generated reference values for regression tests.

Every number here was produced by this package itself (or an independent
mesh study inside it), verified once against an independent route, and
then frozen.  Tests compare against these values with loose tolerances so
genuine regressions surface while root-finder-level jitter does not.

FROZEN_DISK_EIGENVALUE: fundamental clamped eigenvalue of the unweighted
unit disk, from Richardson extrapolation of fd_lowest_eigenvalue over
meshes 2000/4000 (n=2, l=0, R=1, flat weight); consistent with the
1000/2000 extrapolation to 4e-8.

FROZEN_LAMBDA1: fundamental clamped eigenvalues under the exp(r^2/2)
weight, keyed by (n, l, R), from the secular-function pipeline, cross
checked against the finite-difference oracle at generation time.
"""

FROZEN_DISK_EIGENVALUE = 104.36310556184917

FROZEN_LAMBDA1 = {
    (2, 0, 1.0): 119.5460276314993,
    (3, 0, 1.0): 275.4546287395612,
    (4, 0, 1.0): 525.0553880377677,
    (5, 0, 1.0): 893.0891820362567,
    (2, 1, 1.0): 488.4330285000411,
    (3, 1, 1.0): 843.5459856060174,
}
