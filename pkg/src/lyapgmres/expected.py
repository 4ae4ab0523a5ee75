"""Reference values checked by ``lyapgmres reproduce``.

All tolerances live here so they can be changed in one place.  Values are
keyed by reproduction target.
"""

# integration n=100, gamma=2, C=I, unshifted inverse iteration m=1..5
FIG5 = {
    "n": 100, "gamma": 2.0, "shift": 0.0,
    "sqrt_kappa2": [3.49787, 9.21667, 21.34399, 45.58853, 91.87710],
    "mu_g": [0.16600, 0.25027, 0.29110, 0.31813, 0.33835],
    "norm_g": [2.21253, 2.12643, 2.07321, 2.03461, 2.00391],
    "rtol": 1e-3,
}

# same matrix, shift s=0.5
FIG6 = {
    "n": 100, "gamma": 2.0, "shift": 0.5,
    "sqrt_kappa2": [18.44026, 86.38039, 312.50604, 980.52145, 2791.92538],
    "mu_g": [0.50435, 0.54103, 0.55974, 0.57312, 0.58366],
    "norm_g": [2.11270, 2.02089, 1.96449, 1.92343, 1.89110],
    "rtol": 1e-3,
}

# rates for (s=0, m=1), (s=0, m=5), (s=0.5, m=1), (s=0.5, m=5)
TABLE1 = {
    "cases": [(0.0, 1), (0.0, 5), (0.5, 1), (0.5, 5)],
    "rho_e": [0.99718, 0.98564, 0.97109, 0.95118],
    "rho_beta": [0.94257, 0.87140, 0.81859, 0.76566],
    "rho_g": [0.88107, 0.72816, 0.69335, 0.56739],
    "atol_e": 1e-4,
    "atol_beta": 1e-4,
    # circle rate depends on the boundary discretization
    "atol_g": 5e-3,
    "n_angles": 2048,
}

# damped string N=64 with its explicit G
FIG2 = {
    "N": 64,
    "sqrt_kappa2": 225.035,
    "rtol": 1e-3,
    "max_lyapunov_residual": 1e-10,
    # a defective double eigenvalue splits by about sqrt(eps) in floating point
    "double_eig_rtol": 1e-5,
}

# Jordan block n=100, alpha=1.1, C=I
FIG3 = {
    "n": 100, "alpha": 1.1,
    "sqrt_kappa2": 2.4e4,
    "rtol": 0.05,
    # ill-conditioned: only the order of magnitude is meaningful
    "mu_g": 3.6e-9,
    "mu_factor": 10.0,
    "trials": 100,
}

# integration n=100, gamma=2, C=I, m=1
FIG4 = {
    "n": 100, "gamma": 2.0,
    "mu_g_range": (0.165, 0.175),
    "sqrt_kappa2_range": (3.45, 3.55),
    "trials": 100,
}

# comparison sets for the integration matrix
FIG7 = {
    "n": 100, "gamma": 2.0,
    "cut_slack": 1e-9,
}

SEED = 0
