"""Single source of truth for sign and factor conventions.

Every factor of 2 and every i-sign in the library is pinned here and
enforced by the end-to-end tests (area self-tests, the degree-2 rational
map run, and the n=1 reduction of the nonAbelian residual).  The CLI
reports a hash of this table so runs can be compared across versions.
"""

import hashlib

CONVENTIONS = """\
exovortex convention ledger
===========================

domain metric        ds^2 = lam2(z) |dz|^2, volume form  lam2 dx ^ dy
sphere chart         lam2(z) = (4/kappa0) / (1 + |z|^2)^2   (area 4*pi/kappa0)
sphere charts        two stereographic charts, transition z = 1/zeta
torus chart          lam2 = volume / cell_area  (constant), cell = {s*w1 + t*w2}
laplacian            Delta_g = Delta_flat / lam2 = (4/lam2) d_z d_zbar
gauss curvature      K = -Delta_flat(log lam2) / (2 lam2)  (= kappa0 on both charts)

target metric        h_ij(w) = scale * [(1+|w|^2) delta_ij - conj(w_i) w_j] / (1+|w|^2)^2
target scale         fixed at construction by bisection on H(xi) = kappa; equals 2/kappa
riemannian norm      |xi|^2_R = 2 h(xi, xi); n=1 fibre density mu2(w) = 2 h(w) = (4/kappa)/(1+|w|^2)^2
curvature tensor     R_ijkl = -d_k d_lbar h_ij + h^{pq} (d_k h_iq)(d_lbar h_pj)
                     (i jbar: endomorphism pair, k lbar: form pair; R(xi,xi,xi,xi) > 0 on CP^n)
hol. sect. curv.     H(xi) = R(xi, xibar, xi, xibar) / (h(xi,xi))^2

higgs density        rho(z) = mu-fibre(psi(z)) * |dpsi/dz|^2 / lam2(z) = tr(phi phi^dag)
higgs matrix         (phi phi^dag)^i_j = (2/lam2) dpsi^i h_jk conj(dpsi^k)
magnetic field       B = *F/i with line-bundle curvature F = d dbar log h; B(T_Sigma) = kappa0
abelian identity     B = kappa * rho - kappa0
nonabelian identity  B_matrix = -kappa0 * Id + (kappa/2) * (rho * Id + phi phi^dag)
                     (trace integrates to 2*pi*[n(2g-2) + (n+1) deg]; rank-1 form only at n=1)
flux                 k = (1/2pi) * integral of (trace) B over the surface

liouville residual   r = Delta_g log rho + 2 kappa rho - 2 kappa0   (away from zeros)
matrix residual      r = -2 [ B_fd + kappa0 Id - (kappa/2)(rho Id + phi phi^dag) ]
                     B_fd = -(2/lam2) d_zbar( h_V^{-1} d_z h_V ),  h_V = (2/lam2) h_X(psi)
                     (n=1 reduces exactly to the liouville residual)

torus green fn       H(z) = log|theta1(pi z/w1 | tau)|^2 - (2 pi/Im tau) Im(z/w1)^2
                     Delta_flat H = 4 pi (sum of lattice deltas) - 4 pi / cell_area

binomial             C(x, m) = x(x-1)...(x-m+1)/m! for integer x (any sign), m >= 0; 0 for m < 0
bradlow (exotic)     admissible iff k > A (strict); nonexotic: k < A
"""

CONVENTIONS_HASH = hashlib.sha256(CONVENTIONS.encode()).hexdigest()
