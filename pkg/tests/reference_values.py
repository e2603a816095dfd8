"""Published reference values used by the reproduction tests.

Transferred verbatim (three-decimal rounding as printed).
"""

from __future__ import annotations

# columns: n, p, c, lambda_r0, psi_r0, b, mu_H, g_psi, g_b, beta_AIC, beta_BIC, two_kappa_psi, two_kappa_b, beta_1, beta_2, beta_3
GAP_COLUMNS = ("n", "p", "c", "lambda_r0", "psi_r0", "b", "mu_H", "g_psi", "g_b", "beta_AIC", "beta_BIC", "two_kappa_psi", "two_kappa_b", "beta_1", "beta_2", "beta_3")

GAP_TABLES = {
    'H1': [
        (1000, 250, 0.25, 2.0, 2.178, 1.371, 0.5, 1.885, 0.734, 0.5, 1.727, 0.59, 1.102, 3.732, 3.97, 2.813),
        (1000, 250, 0.25, 3.0, 3.155, 1.371, 0.5, 3.472, 0.734, 0.5, 1.727, 0.547, 1.101, 3.732, 3.97, 2.813),
        (1000, 250, 0.25, 4.0, 4.146, 1.371, 0.5, 5.179, 0.734, 0.5, 1.727, 0.531, 1.102, 3.732, 3.97, 2.813),
        (1000, 250, 0.25, 5.0, 5.141, 1.371, 0.5, 6.949, 0.733, 0.5, 1.727, 0.523, 1.101, 3.732, 3.97, 2.813),
        (1000, 500, 0.5, 2.0, 2.355, 1.694, 0.5, 2.159, 1.167, 1.0, 3.454, 1.306, 2.478, 5.549, 6.09, 3.388),
        (1000, 500, 0.5, 3.0, 3.31, 1.694, 0.5, 3.73, 1.167, 1.0, 3.454, 1.157, 2.478, 5.549, 6.09, 3.388),
        (1000, 500, 0.5, 4.0, 4.292, 1.693, 0.5, 5.435, 1.168, 1.0, 3.454, 1.105, 2.478, 5.549, 6.09, 3.388),
        (1000, 500, 0.5, 5.0, 5.283, 1.694, 0.5, 7.211, 1.167, 1.0, 3.454, 1.079, 2.479, 5.549, 6.09, 3.388),
        (600, 600, 1.0, 2.0, 2.711, 2.24, 0.5, 2.73, 1.979, 2.0, 6.397, 3.112, 5.571, 7.973, 9.245, 3.541),
        (600, 600, 1.0, 3.0, 3.621, 2.24, 0.5, 4.262, 1.979, 2.0, 6.397, 2.57, 5.571, 7.973, 9.245, 3.541),
        (600, 600, 1.0, 4.0, 4.585, 2.239, 0.5, 5.955, 1.979, 2.0, 6.397, 2.38, 5.571, 7.973, 9.245, 3.541),
        (600, 600, 1.0, 5.0, 5.566, 2.24, 0.5, 7.716, 1.979, 2.0, 6.397, 2.285, 5.571, 7.973, 9.245, 3.541),
        (400, 600, 1.5, 2.0, 3.066, 2.722, 0.5, 3.319, 2.749, 3.0, 8.987, 5.419, 9.017, 10.084, 11.272, 5.791),
        (400, 600, 1.5, 3.0, 3.931, 2.72, 0.5, 4.803, 2.75, 3.0, 8.987, 4.238, 9.015, 10.084, 11.272, 5.791),
        (400, 600, 1.5, 4.0, 4.877, 2.721, 0.5, 6.479, 2.749, 3.0, 8.987, 3.826, 9.017, 10.084, 11.272, 5.791),
        (400, 600, 1.5, 5.0, 5.848, 2.722, 0.5, 8.238, 2.749, 3.0, 8.987, 3.619, 9.016, 10.084, 11.272, 5.791),
    ],
    'H2': [
        (1000, 250, 0.25, 2.0, 2.17, 1.226, 0.5, 1.871, 0.554, 0.5, 1.727, 0.563, 1.006, 3.732, 3.97, 2.813),
        (1000, 250, 0.25, 3.0, 3.151, 1.226, 0.5, 3.463, 0.555, 0.5, 1.727, 0.533, 1.005, 3.732, 3.97, 2.813),
        (1000, 250, 0.25, 4.0, 4.144, 1.226, 0.5, 5.173, 0.554, 0.5, 1.727, 0.522, 1.01, 3.732, 3.97, 2.813),
        (1000, 250, 0.25, 5.0, 5.14, 1.227, 0.5, 6.949, 0.556, 0.5, 1.727, 0.517, 1.004, 3.732, 3.97, 2.813),
        (1000, 500, 0.5, 2.0, 2.339, 1.54, 0.5, 2.136, 0.955, 1.0, 3.454, 1.24, 2.479, 5.549, 6.09, 3.388),
        (1000, 500, 0.5, 3.0, 3.303, 1.54, 0.5, 3.718, 0.955, 1.0, 3.454, 1.127, 2.483, 5.549, 6.09, 3.388),
        (1000, 500, 0.5, 4.0, 4.288, 1.54, 0.5, 5.425, 0.955, 1.0, 3.454, 1.086, 2.483, 5.549, 6.09, 3.388),
        (1000, 500, 0.5, 5.0, 5.279, 1.54, 0.5, 7.203, 0.955, 1.0, 3.454, 1.064, 2.482, 5.549, 6.09, 3.388),
        (600, 600, 1.0, 2.0, 2.678, 2.077, 0.5, 2.678, 1.73, 2.0, 6.397, 2.939, 5.719, 7.973, 9.245, 3.541),
        (600, 600, 1.0, 3.0, 3.606, 2.077, 0.5, 4.236, 1.73, 2.0, 6.397, 2.498, 5.718, 7.973, 9.245, 3.541),
        (600, 600, 1.0, 4.0, 4.575, 2.077, 0.5, 5.936, 1.73, 2.0, 6.397, 2.336, 5.719, 7.973, 9.245, 3.541),
        (600, 600, 1.0, 5.0, 5.558, 2.077, 0.5, 7.707, 1.73, 2.0, 6.397, 2.253, 5.72, 7.973, 9.245, 3.541),
        (400, 600, 1.5, 2.0, 3.018, 2.552, 0.5, 3.237, 2.474, 3.0, 8.987, 5.095, 9.301, 10.084, 11.272, 5.791),
        (400, 600, 1.5, 3.0, 3.908, 2.552, 0.5, 4.761, 2.474, 3.0, 8.987, 4.113, 9.301, 10.084, 11.272, 5.791),
        (400, 600, 1.5, 4.0, 4.863, 2.552, 0.5, 6.45, 2.474, 3.0, 8.987, 3.752, 9.303, 10.084, 11.272, 5.791),
        (400, 600, 1.5, 5.0, 5.837, 2.552, 0.5, 8.219, 2.474, 3.0, 8.987, 3.566, 9.304, 10.084, 11.272, 5.791),
    ],
    'H3': [
        (1000, 250, 0.25, 2.0, 2.209, 1.666, 0.501, 1.926, 1.123, 0.5, 1.727, 0.707, 1.502, 3.732, 3.97, 2.813),
        (1000, 250, 0.25, 3.0, 3.169, 1.666, 0.502, 3.476, 1.123, 0.5, 1.727, 0.598, 1.502, 3.732, 3.97, 2.813),
        (1000, 250, 0.25, 4.0, 4.155, 1.665, 0.501, 5.18, 1.124, 0.5, 1.727, 0.564, 1.502, 3.732, 3.97, 2.813),
        (1000, 250, 0.25, 5.0, 5.148, 1.666, 0.501, 6.945, 1.124, 0.5, 1.727, 0.547, 1.501, 3.732, 3.97, 2.813),
        (1000, 500, 0.5, 2.0, 2.419, 2.033, 0.501, 2.252, 1.655, 1.0, 3.454, 1.589, 2.925, 5.549, 6.09, 3.388),
        (1000, 500, 0.5, 3.0, 3.339, 2.034, 0.501, 3.765, 1.657, 1.0, 3.454, 1.272, 2.926, 5.549, 6.09, 3.388),
        (1000, 500, 0.5, 4.0, 4.31, 2.033, 0.501, 5.444, 1.655, 1.0, 3.454, 1.175, 2.925, 5.549, 6.09, 3.388),
        (1000, 500, 0.5, 5.0, 5.296, 2.032, 0.501, 7.213, 1.655, 1.0, 3.454, 1.129, 2.925, 5.549, 6.09, 3.388),
        (600, 600, 1.0, 2.0, 2.837, 2.629, 0.501, 2.928, 2.59, 2.0, 6.397, 3.87, 5.993, 7.973, 9.245, 3.541),
        (600, 600, 1.0, 3.0, 3.677, 2.628, 0.501, 4.348, 2.591, 2.0, 6.397, 2.846, 5.993, 7.973, 9.245, 3.541),
        (600, 600, 1.0, 4.0, 4.621, 2.631, 0.502, 5.993, 2.589, 2.0, 6.397, 2.542, 5.995, 7.973, 9.245, 3.541),
        (600, 600, 1.0, 5.0, 5.592, 2.63, 0.501, 7.743, 2.589, 2.0, 6.397, 2.397, 5.994, 7.973, 9.245, 3.541),
        (400, 600, 1.5, 2.0, 3.256, 3.15, 0.501, 3.624, 3.444, 3.0, 8.987, 6.849, 9.329, 10.084, 11.272, 5.791),
        (400, 600, 1.5, 3.0, 4.017, 3.15, 0.501, 4.929, 3.444, 3.0, 8.987, 4.726, 9.33, 10.084, 11.272, 5.791),
        (400, 600, 1.5, 4.0, 4.931, 3.149, 0.501, 6.553, 3.444, 3.0, 8.987, 4.1, 9.327, 10.084, 11.272, 5.791),
        (400, 600, 1.5, 5.0, 5.888, 3.151, 0.501, 8.28, 3.445, 3.0, 8.987, 3.805, 9.33, 10.084, 11.272, 5.791),
    ],
}

STUDY1_METHODS = ('AIC', 'BIC', 'GIC', 'PC1', 'IC1', 'PC2', 'IC2', 'PC3', 'IC3')

# (n, p, lambda_r0, {method: (hit_rate, gap_flag)}) with r0 = 5
ACCURACY_TABLES = {
    'H1': [
        (1000, 250, 2.0, {'AIC': (0.0, 'F'), 'BIC': (0.716, 'T'), 'GIC': (1.0, 'T'), 'PC1': (0.0, 'F'), 'IC1': (0.0, 'F'), 'PC2': (0.0, 'F'), 'IC2': (0.0, 'F'), 'PC3': (0.0, 'F'), 'IC3': (0.0, 'F')}),
        (1000, 250, 3.0, {'AIC': (0.0, 'F'), 'BIC': (1.0, 'T'), 'GIC': (1.0, 'T'), 'PC1': (0.008, 'F'), 'IC1': (0.042, 'F'), 'PC2': (0.0, 'F'), 'IC2': (0.002, 'F'), 'PC3': (0.992, 'T'), 'IC3': (0.994, 'T')}),
        (1000, 250, 4.0, {'AIC': (0.0, 'F'), 'BIC': (1.0, 'T'), 'GIC': (0.996, 'T'), 'PC1': (1.0, 'T'), 'IC1': (1.0, 'T'), 'PC2': (1.0, 'T'), 'IC2': (1.0, 'T'), 'PC3': (1.0, 'T'), 'IC3': (1.0, 'T')}),
        (1000, 250, 5.0, {'AIC': (0.0, 'F'), 'BIC': (1.0, 'T'), 'GIC': (0.998, 'T'), 'PC1': (1.0, 'T'), 'IC1': (1.0, 'T'), 'PC2': (1.0, 'T'), 'IC2': (1.0, 'T'), 'PC3': (1.0, 'T'), 'IC3': (1.0, 'T')}),
        (1000, 500, 2.0, {'AIC': (0.0, 'F'), 'BIC': (0.0, 'F'), 'GIC': (1.0, 'T'), 'PC1': (0.0, 'F'), 'IC1': (0.0, 'F'), 'PC2': (0.0, 'F'), 'IC2': (0.0, 'F'), 'PC3': (0.0, 'F'), 'IC3': (0.0, 'F')}),
        (1000, 500, 3.0, {'AIC': (0.0, 'F'), 'BIC': (0.676, 'T'), 'GIC': (1.0, 'T'), 'PC1': (0.0, 'F'), 'IC1': (0.0, 'F'), 'PC2': (0.0, 'F'), 'IC2': (0.0, 'F'), 'PC3': (0.728, 'T'), 'IC3': (0.804, 'T')}),
        (1000, 500, 4.0, {'AIC': (0.0, 'F'), 'BIC': (1.0, 'T'), 'GIC': (1.0, 'T'), 'PC1': (0.042, 'F'), 'IC1': (0.086, 'F'), 'PC2': (0.0, 'F'), 'IC2': (0.0, 'F'), 'PC3': (1.0, 'T'), 'IC3': (1.0, 'T')}),
        (1000, 500, 5.0, {'AIC': (0.0, 'F'), 'BIC': (1.0, 'T'), 'GIC': (1.0, 'T'), 'PC1': (1.0, 'T'), 'IC1': (1.0, 'T'), 'PC2': (0.98, 'T'), 'IC2': (0.98, 'T'), 'PC3': (1.0, 'T'), 'IC3': (1.0, 'T')}),
        (600, 600, 2.0, {'AIC': (0.838, 'T'), 'BIC': (0.0, 'F'), 'GIC': (0.124, 'F'), 'PC1': (0.0, 'F'), 'IC1': (0.0, 'F'), 'PC2': (0.0, 'F'), 'IC2': (0.0, 'F'), 'PC3': (0.0, 'F'), 'IC3': (0.0, 'F')}),
        (600, 600, 3.0, {'AIC': (0.836, 'T'), 'BIC': (0.0, 'F'), 'GIC': (1.0, 'T'), 'PC1': (0.0, 'F'), 'IC1': (0.0, 'F'), 'PC2': (0.0, 'F'), 'IC2': (0.0, 'F'), 'PC3': (0.958, 'T'), 'IC3': (0.978, 'T')}),
        (600, 600, 4.0, {'AIC': (0.806, 'T'), 'BIC': (0.002, 'F'), 'GIC': (1.0, 'T'), 'PC1': (0.0, 'F'), 'IC1': (0.0, 'F'), 'PC2': (0.0, 'F'), 'IC2': (0.0, 'F'), 'PC3': (1.0, 'T'), 'IC3': (1.0, 'T')}),
        (600, 600, 5.0, {'AIC': (0.808, 'T'), 'BIC': (0.954, 'T'), 'GIC': (1.0, 'T'), 'PC1': (0.006, 'F'), 'IC1': (0.026, 'F'), 'PC2': (0.0, 'F'), 'IC2': (0.0, 'F'), 'PC3': (1.0, 'T'), 'IC3': (1.0, 'T')}),
        (400, 600, 2.0, {'AIC': (0.828, 'T'), 'BIC': (0.0, 'F'), 'GIC': (0.0, 'F'), 'PC1': (0.0, 'F'), 'IC1': (0.0, 'F'), 'PC2': (0.0, 'F'), 'IC2': (0.0, 'F'), 'PC3': (0.0, 'F'), 'IC3': (0.0, 'F')}),
        (400, 600, 3.0, {'AIC': (0.998, 'T'), 'BIC': (0.0, 'F'), 'GIC': (0.868, 'T'), 'PC1': (0.0, 'F'), 'IC1': (0.0, 'F'), 'PC2': (0.0, 'F'), 'IC2': (0.0, 'F'), 'PC3': (0.0, 'F'), 'IC3': (0.0, 'F')}),
        (400, 600, 4.0, {'AIC': (1.0, 'T'), 'BIC': (0.0, 'F'), 'GIC': (1.0, 'T'), 'PC1': (0.0, 'F'), 'IC1': (0.0, 'F'), 'PC2': (0.0, 'F'), 'IC2': (0.0, 'F'), 'PC3': (0.442, 'T'), 'IC3': (0.588, 'T')}),
        (400, 600, 5.0, {'AIC': (1.0, 'T'), 'BIC': (0.0, 'F'), 'GIC': (1.0, 'T'), 'PC1': (0.0, 'F'), 'IC1': (0.0, 'F'), 'PC2': (0.0, 'F'), 'IC2': (0.0, 'F'), 'PC3': (1.0, 'T'), 'IC3': (1.0, 'T')}),
    ],
    'H2': [
        (1000, 250, 2.0, {'AIC': (0.134, 'F'), 'BIC': (0.65, 'T'), 'GIC': (1.0, 'T'), 'PC1': (0.0, 'F'), 'IC1': (0.0, 'F'), 'PC2': (0.0, 'F'), 'IC2': (0.0, 'F'), 'PC3': (0.0, 'F'), 'IC3': (0.0, 'F')}),
        (1000, 250, 3.0, {'AIC': (0.094, 'F'), 'BIC': (1.0, 'T'), 'GIC': (1.0, 'T'), 'PC1': (0.002, 'F'), 'IC1': (0.02, 'F'), 'PC2': (0.0, 'F'), 'IC2': (0.0, 'F'), 'PC3': (0.984, 'T'), 'IC3': (0.994, 'T')}),
        (1000, 250, 4.0, {'AIC': (0.11, 'F'), 'BIC': (1.0, 'T'), 'GIC': (1.0, 'T'), 'PC1': (1.0, 'T'), 'IC1': (1.0, 'T'), 'PC2': (1.0, 'T'), 'IC2': (1.0, 'T'), 'PC3': (1.0, 'T'), 'IC3': (1.0, 'T')}),
        (1000, 250, 5.0, {'AIC': (0.13, 'F'), 'BIC': (1.0, 'T'), 'GIC': (1.0, 'T'), 'PC1': (1.0, 'T'), 'IC1': (1.0, 'T'), 'PC2': (1.0, 'T'), 'IC2': (1.0, 'T'), 'PC3': (1.0, 'T'), 'IC3': (1.0, 'T')}),
        (1000, 500, 2.0, {'AIC': (0.984, 'T'), 'BIC': (0.0, 'F'), 'GIC': (1.0, 'T'), 'PC1': (0.0, 'F'), 'IC1': (0.0, 'F'), 'PC2': (0.0, 'F'), 'IC2': (0.0, 'F'), 'PC3': (0.0, 'F'), 'IC3': (0.0, 'F')}),
        (1000, 500, 3.0, {'AIC': (0.99, 'T'), 'BIC': (0.638, 'T'), 'GIC': (1.0, 'T'), 'PC1': (0.0, 'F'), 'IC1': (0.0, 'F'), 'PC2': (0.0, 'F'), 'IC2': (0.0, 'F'), 'PC3': (0.69, 'T'), 'IC3': (0.774, 'T')}),
        (1000, 500, 4.0, {'AIC': (0.986, 'T'), 'BIC': (1.0, 'T'), 'GIC': (1.0, 'T'), 'PC1': (0.028, 'F'), 'IC1': (0.056, 'F'), 'PC2': (0.0, 'F'), 'IC2': (0.0, 'F'), 'PC3': (1.0, 'T'), 'IC3': (1.0, 'T')}),
        (1000, 500, 5.0, {'AIC': (0.978, 'T'), 'BIC': (1.0, 'T'), 'GIC': (1.0, 'T'), 'PC1': (1.0, 'T'), 'IC1': (1.0, 'T'), 'PC2': (0.964, 'T'), 'IC2': (0.974, 'T'), 'PC3': (1.0, 'T'), 'IC3': (1.0, 'T')}),
        (600, 600, 2.0, {'AIC': (1.0, 'T'), 'BIC': (0.0, 'F'), 'GIC': (0.298, 'F'), 'PC1': (0.0, 'F'), 'IC1': (0.0, 'F'), 'PC2': (0.0, 'F'), 'IC2': (0.0, 'F'), 'PC3': (0.0, 'F'), 'IC3': (0.0, 'F')}),
        (600, 600, 3.0, {'AIC': (1.0, 'T'), 'BIC': (0.0, 'F'), 'GIC': (1.0, 'T'), 'PC1': (0.0, 'F'), 'IC1': (0.0, 'F'), 'PC2': (0.0, 'F'), 'IC2': (0.0, 'F'), 'PC3': (0.906, 'T'), 'IC3': (0.952, 'T')}),
        (600, 600, 4.0, {'AIC': (1.0, 'T'), 'BIC': (0.004, 'F'), 'GIC': (1.0, 'T'), 'PC1': (0.0, 'F'), 'IC1': (0.0, 'F'), 'PC2': (0.0, 'F'), 'IC2': (0.0, 'F'), 'PC3': (1.0, 'T'), 'IC3': (1.0, 'T')}),
        (600, 600, 5.0, {'AIC': (1.0, 'T'), 'BIC': (0.944, 'T'), 'GIC': (1.0, 'T'), 'PC1': (0.004, 'F'), 'IC1': (0.006, 'F'), 'PC2': (0.0, 'F'), 'IC2': (0.0, 'F'), 'PC3': (1.0, 'T'), 'IC3': (1.0, 'T')}),
        (400, 600, 2.0, {'AIC': (0.64, 'T'), 'BIC': (0.0, 'F'), 'GIC': (0.0, 'F'), 'PC1': (0.0, 'F'), 'IC1': (0.0, 'F'), 'PC2': (0.0, 'F'), 'IC2': (0.0, 'F'), 'PC3': (0.0, 'F'), 'IC3': (0.0, 'F')}),
        (400, 600, 3.0, {'AIC': (1.0, 'T'), 'BIC': (0.0, 'F'), 'GIC': (0.922, 'T'), 'PC1': (0.0, 'F'), 'IC1': (0.0, 'F'), 'PC2': (0.0, 'F'), 'IC2': (0.0, 'F'), 'PC3': (0.0, 'F'), 'IC3': (0.0, 'F')}),
        (400, 600, 4.0, {'AIC': (1.0, 'T'), 'BIC': (0.0, 'F'), 'GIC': (1.0, 'T'), 'PC1': (0.0, 'F'), 'IC1': (0.0, 'F'), 'PC2': (0.0, 'F'), 'IC2': (0.0, 'F'), 'PC3': (0.426, 'T'), 'IC3': (0.578, 'T')}),
        (400, 600, 5.0, {'AIC': (1.0, 'T'), 'BIC': (0.002, 'F'), 'GIC': (1.0, 'T'), 'PC1': (0.0, 'F'), 'IC1': (0.0, 'F'), 'PC2': (0.0, 'F'), 'IC2': (0.0, 'F'), 'PC3': (0.998, 'T'), 'IC3': (0.998, 'T')}),
    ],
    'H3': [
        (1000, 250, 2.0, {'AIC': (0.0, 'F'), 'BIC': (0.77, 'T'), 'GIC': (0.326, 'T'), 'PC1': (0.0, 'F'), 'IC1': (0.0, 'F'), 'PC2': (0.0, 'F'), 'IC2': (0.0, 'F'), 'PC3': (0.0, 'F'), 'IC3': (0.0, 'F')}),
        (1000, 250, 3.0, {'AIC': (0.0, 'F'), 'BIC': (1.0, 'T'), 'GIC': (0.384, 'T'), 'PC1': (0.0, 'F'), 'IC1': (0.084, 'F'), 'PC2': (0.0, 'F'), 'IC2': (0.024, 'F'), 'PC3': (0.988, 'T'), 'IC3': (0.972, 'T')}),
        (1000, 250, 4.0, {'AIC': (0.0, 'F'), 'BIC': (1.0, 'T'), 'GIC': (0.404, 'T'), 'PC1': (1.0, 'T'), 'IC1': (1.0, 'T'), 'PC2': (1.0, 'T'), 'IC2': (0.994, 'T'), 'PC3': (1.0, 'T'), 'IC3': (1.0, 'T')}),
        (1000, 250, 5.0, {'AIC': (0.0, 'F'), 'BIC': (1.0, 'T'), 'GIC': (0.372, 'T'), 'PC1': (1.0, 'T'), 'IC1': (1.0, 'T'), 'PC2': (1.0, 'T'), 'IC2': (1.0, 'T'), 'PC3': (1.0, 'T'), 'IC3': (1.0, 'T')}),
        (1000, 500, 2.0, {'AIC': (0.0, 'F'), 'BIC': (0.0, 'F'), 'GIC': (0.994, 'T'), 'PC1': (0.0, 'F'), 'IC1': (0.0, 'F'), 'PC2': (0.0, 'F'), 'IC2': (0.0, 'F'), 'PC3': (0.0, 'F'), 'IC3': (0.0, 'F')}),
        (1000, 500, 3.0, {'AIC': (0.0, 'F'), 'BIC': (0.716, 'T'), 'GIC': (1.0, 'T'), 'PC1': (0.0, 'F'), 'IC1': (0.0, 'F'), 'PC2': (0.0, 'F'), 'IC2': (0.0, 'F'), 'PC3': (0.758, 'T'), 'IC3': (0.822, 'T')}),
        (1000, 500, 4.0, {'AIC': (0.0, 'F'), 'BIC': (1.0, 'T'), 'GIC': (1.0, 'T'), 'PC1': (0.036, 'F'), 'IC1': (0.134, 'F'), 'PC2': (0.0, 'F'), 'IC2': (0.004, 'F'), 'PC3': (1.0, 'T'), 'IC3': (1.0, 'T')}),
        (1000, 500, 5.0, {'AIC': (0.0, 'F'), 'BIC': (1.0, 'T'), 'GIC': (1.0, 'T'), 'PC1': (0.998, 'T'), 'IC1': (1.0, 'T'), 'PC2': (0.962, 'T'), 'IC2': (0.958, 'T'), 'PC3': (1.0, 'T'), 'IC3': (1.0, 'T')}),
        (600, 600, 2.0, {'AIC': (0.0, 'F'), 'BIC': (0.0, 'F'), 'GIC': (0.016, 'F'), 'PC1': (0.0, 'F'), 'IC1': (0.0, 'F'), 'PC2': (0.0, 'F'), 'IC2': (0.0, 'F'), 'PC3': (0.0, 'F'), 'IC3': (0.0, 'F')}),
        (600, 600, 3.0, {'AIC': (0.0, 'F'), 'BIC': (0.0, 'F'), 'GIC': (1.0, 'T'), 'PC1': (0.0, 'F'), 'IC1': (0.0, 'F'), 'PC2': (0.0, 'F'), 'IC2': (0.0, 'F'), 'PC3': (0.976, 'T'), 'IC3': (0.984, 'T')}),
        (600, 600, 4.0, {'AIC': (0.0, 'F'), 'BIC': (0.014, 'F'), 'GIC': (1.0, 'T'), 'PC1': (0.0, 'F'), 'IC1': (0.0, 'F'), 'PC2': (0.0, 'F'), 'IC2': (0.0, 'F'), 'PC3': (1.0, 'T'), 'IC3': (1.0, 'T')}),
        (600, 600, 5.0, {'AIC': (0.0, 'F'), 'BIC': (0.942, 'T'), 'GIC': (1.0, 'T'), 'PC1': (0.0, 'F'), 'IC1': (0.028, 'F'), 'PC2': (0.0, 'F'), 'IC2': (0.0, 'F'), 'PC3': (1.0, 'T'), 'IC3': (1.0, 'T')}),
        (400, 600, 2.0, {'AIC': (0.0, 'F'), 'BIC': (0.0, 'F'), 'GIC': (0.0, 'F'), 'PC1': (0.0, 'F'), 'IC1': (0.0, 'F'), 'PC2': (0.0, 'F'), 'IC2': (0.0, 'F'), 'PC3': (0.0, 'F'), 'IC3': (0.0, 'F')}),
        (400, 600, 3.0, {'AIC': (0.0, 'F'), 'BIC': (0.0, 'F'), 'GIC': (0.644, 'T'), 'PC1': (0.0, 'F'), 'IC1': (0.0, 'F'), 'PC2': (0.0, 'F'), 'IC2': (0.0, 'F'), 'PC3': (0.0, 'F'), 'IC3': (0.0, 'F')}),
        (400, 600, 4.0, {'AIC': (0.0, 'F'), 'BIC': (0.0, 'F'), 'GIC': (1.0, 'T'), 'PC1': (0.0, 'F'), 'IC1': (0.0, 'F'), 'PC2': (0.0, 'F'), 'IC2': (0.0, 'F'), 'PC3': (0.474, 'T'), 'IC3': (0.68, 'T')}),
        (400, 600, 5.0, {'AIC': (0.0, 'F'), 'BIC': (0.002, 'F'), 'GIC': (1.0, 'T'), 'PC1': (0.0, 'F'), 'IC1': (0.0, 'F'), 'PC2': (0.0, 'F'), 'IC2': (0.0, 'F'), 'PC3': (1.0, 'T'), 'IC3': (1.0, 'T')}),
    ],
}

STUDY2_METHODS = ('AIC', 'BIC', 'GIC', 'PC3', 'IC3', 'ACT', 'DPA', 'ED', 'GR')

HIGH_RANK = [
    (5, {'AIC': 1.0, 'BIC': 1.0, 'GIC': 1.0, 'PC3': 0.988, 'IC3': 0.998, 'ACT': 1.0, 'DPA': 1.0, 'ED': 0.986, 'GR': 1.0}),
    (10, {'AIC': 1.0, 'BIC': 0.986, 'GIC': 1.0, 'PC3': 0.668, 'IC3': 0.978, 'ACT': 1.0, 'DPA': 1.0, 'ED': 0.994, 'GR': 1.0}),
    (15, {'AIC': 1.0, 'BIC': 0.916, 'GIC': 1.0, 'PC3': 0.068, 'IC3': 0.91, 'ACT': 1.0, 'DPA': 1.0, 'ED': 0.99, 'GR': 1.0}),
    (20, {'AIC': 1.0, 'BIC': 0.71, 'GIC': 1.0, 'PC3': 0.0, 'IC3': 0.792, 'ACT': 1.0, 'DPA': 1.0, 'ED': 1.0, 'GR': 1.0}),
    (25, {'AIC': 0.998, 'BIC': 0.444, 'GIC': 1.0, 'PC3': 0.0, 'IC3': 0.686, 'ACT': 1.0, 'DPA': 0.236, 'ED': 1.0, 'GR': 1.0}),
]

HEAVY_TAILED = [
    ('t5', {'AIC': 0.914, 'BIC': 1.0, 'GIC': 0.976, 'PC3': 0.984, 'IC3': 1.0, 'ACT': 0.998, 'DPA': 0.97, 'ED': 0.894, 'GR': 0.994}),
    ('pareto', {'AIC': 0.018, 'BIC': 0.928, 'GIC': 0.522, 'PC3': 0.916, 'IC3': 0.93, 'ACT': 0.996, 'DPA': 0.718, 'ED': 0.292, 'GR': 0.848}),
    ('lognormal', {'AIC': 0.0, 'BIC': 0.86, 'GIC': 0.206, 'PC3': 0.882, 'IC3': 0.882, 'ACT': 0.988, 'DPA': 0.698, 'ED': 0.164, 'GR': 0.756}),
]

SPARSE = [
    (5, {'AIC': 1.0, 'BIC': 1.0, 'GIC': 1.0, 'PC3': 0.984, 'IC3': 0.996, 'ACT': 0.982, 'DPA': 1.0, 'ED': 0.976, 'GR': 1.0}),
    (10, {'AIC': 1.0, 'BIC': 1.0, 'GIC': 1.0, 'PC3': 0.986, 'IC3': 0.998, 'ACT': 0.84, 'DPA': 1.0, 'ED': 0.978, 'GR': 1.0}),
    (15, {'AIC': 1.0, 'BIC': 1.0, 'GIC': 1.0, 'PC3': 0.986, 'IC3': 0.998, 'ACT': 0.012, 'DPA': 0.918, 'ED': 0.974, 'GR': 1.0}),
    (20, {'AIC': 1.0, 'BIC': 0.996, 'GIC': 1.0, 'PC3': 0.978, 'IC3': 0.994, 'ACT': 0.0, 'DPA': 0.372, 'ED': 0.976, 'GR': 1.0}),
]

LARGE_LAMBDA1 = [
    (100.0, {'AIC': 1.0, 'BIC': 1.0, 'GIC': 1.0, 'PC3': 0.99, 'IC3': 1.0, 'ACT': 1.0, 'DPA': 0.428, 'ED': 0.972, 'GR': 0.0}),
    (1000.0, {'AIC': 1.0, 'BIC': 1.0, 'GIC': 1.0, 'PC3': 0.992, 'IC3': 0.994, 'ACT': 1.0, 'DPA': 0.0, 'ED': 0.972, 'GR': 0.0}),
    (10000.0, {'AIC': 1.0, 'BIC': 1.0, 'GIC': 1.0, 'PC3': 0.992, 'IC3': 0.998, 'ACT': 0.0, 'DPA': 0.0, 'ED': 0.988, 'GR': 0.0}),
    (100000.0, {'AIC': 1.0, 'BIC': 0.998, 'GIC': 1.0, 'PC3': 0.986, 'IC3': 0.992, 'ACT': 0.0, 'DPA': 0.0, 'ED': 0.978, 'GR': 0.0}),
    (1000000.0, {'AIC': 1.0, 'BIC': 1.0, 'GIC': 1.0, 'PC3': 0.996, 'IC3': 1.0, 'ACT': 0.0, 'DPA': 0.0, 'ED': 0.974, 'GR': 0.0}),
]

POWER_SPIKED = [
    (2, {'AIC': 1.0, 'BIC': 1.0, 'GIC': 1.0, 'PC3': 1.0, 'IC3': 1.0, 'ACT': 1.0, 'DPA': 0.25, 'ED': 0.99, 'GR': 0.96}),
    (3, {'AIC': 1.0, 'BIC': 1.0, 'GIC': 1.0, 'PC3': 1.0, 'IC3': 1.0, 'ACT': 0.98, 'DPA': 0.0, 'ED': 0.98, 'GR': 0.15}),
    (4, {'AIC': 1.0, 'BIC': 1.0, 'GIC': 1.0, 'PC3': 1.0, 'IC3': 1.0, 'ACT': 0.0, 'DPA': 0.0, 'ED': 0.97, 'GR': 0.0}),
    (5, {'AIC': 1.0, 'BIC': 1.0, 'GIC': 1.0, 'PC3': 1.0, 'IC3': 1.0, 'ACT': 0.0, 'DPA': 0.0, 'ED': 0.97, 'GR': 0.0}),
]

# (n, p, lambda_r0, {method: hit_rate}) with r0 = 5, H4
LARGE_P = [
    (300, 900, 5.0, {'AIC': 0.0, 'BIC': 0.0, 'GIC': 0.0, 'PC1': 0.0, 'IC1': 0.0, 'PC2': 0.0, 'IC2': 0.0, 'PC3': 0.0, 'IC3': 0.0}),
    (300, 900, 10.0, {'AIC': 1.0, 'BIC': 0.0, 'GIC': 0.892, 'PC1': 0.0, 'IC1': 0.0, 'PC2': 0.0, 'IC2': 0.0, 'PC3': 0.0, 'IC3': 0.0}),
    (300, 900, 15.0, {'AIC': 1.0, 'BIC': 0.0, 'GIC': 1.0, 'PC1': 0.0, 'IC1': 0.0, 'PC2': 0.0, 'IC2': 0.0, 'PC3': 0.038, 'IC3': 0.084}),
    (300, 900, 20.0, {'AIC': 1.0, 'BIC': 0.126, 'GIC': 1.0, 'PC1': 0.034, 'IC1': 0.054, 'PC2': 0.0, 'IC2': 0.002, 'PC3': 0.998, 'IC3': 1.0}),
    (300, 900, 25.0, {'AIC': 1.0, 'BIC': 0.988, 'GIC': 1.0, 'PC1': 0.956, 'IC1': 0.974, 'PC2': 0.764, 'IC2': 0.854, 'PC3': 1.0, 'IC3': 1.0}),
    (300, 900, 30.0, {'AIC': 1.0, 'BIC': 1.0, 'GIC': 1.0, 'PC1': 1.0, 'IC1': 1.0, 'PC2': 1.0, 'IC2': 1.0, 'PC3': 1.0, 'IC3': 1.0}),
    (300, 900, 35.0, {'AIC': 1.0, 'BIC': 1.0, 'GIC': 1.0, 'PC1': 1.0, 'IC1': 1.0, 'PC2': 1.0, 'IC2': 1.0, 'PC3': 1.0, 'IC3': 1.0}),
    (250, 1000, 5.0, {'AIC': 0.0, 'BIC': 0.0, 'GIC': 0.0, 'PC1': 0.0, 'IC1': 0.0, 'PC2': 0.0, 'IC2': 0.0, 'PC3': 0.0, 'IC3': 0.0}),
    (250, 1000, 10.0, {'AIC': 0.998, 'BIC': 0.0, 'GIC': 0.032, 'PC1': 0.0, 'IC1': 0.0, 'PC2': 0.0, 'IC2': 0.0, 'PC3': 0.0, 'IC3': 0.0}),
    (250, 1000, 15.0, {'AIC': 1.0, 'BIC': 0.0, 'GIC': 0.994, 'PC1': 0.0, 'IC1': 0.0, 'PC2': 0.0, 'IC2': 0.0, 'PC3': 0.0, 'IC3': 0.0}),
    (250, 1000, 20.0, {'AIC': 1.0, 'BIC': 0.0, 'GIC': 1.0, 'PC1': 0.0, 'IC1': 0.0, 'PC2': 0.0, 'IC2': 0.0, 'PC3': 0.064, 'IC3': 0.146}),
    (250, 1000, 25.0, {'AIC': 1.0, 'BIC': 0.152, 'GIC': 1.0, 'PC1': 0.072, 'IC1': 0.14, 'PC2': 0.012, 'IC2': 0.028, 'PC3': 0.956, 'IC3': 0.978}),
    (250, 1000, 30.0, {'AIC': 1.0, 'BIC': 0.95, 'GIC': 1.0, 'PC1': 0.904, 'IC1': 0.934, 'PC2': 0.682, 'IC2': 0.79, 'PC3': 1.0, 'IC3': 1.0}),
    (250, 1000, 35.0, {'AIC': 1.0, 'BIC': 0.998, 'GIC': 1.0, 'PC1': 0.998, 'IC1': 0.998, 'PC2': 0.988, 'IC2': 0.99, 'PC3': 1.0, 'IC3': 1.0}),
    (240, 1200, 5.0, {'AIC': 0.0, 'BIC': 0.0, 'GIC': 0.0, 'PC1': 0.0, 'IC1': 0.0, 'PC2': 0.0, 'IC2': 0.0, 'PC3': 0.0, 'IC3': 0.0}),
    (240, 1200, 10.0, {'AIC': 0.844, 'BIC': 0.0, 'GIC': 0.0, 'PC1': 0.0, 'IC1': 0.0, 'PC2': 0.0, 'IC2': 0.0, 'PC3': 0.0, 'IC3': 0.0}),
    (240, 1200, 15.0, {'AIC': 1.0, 'BIC': 0.0, 'GIC': 0.858, 'PC1': 0.0, 'IC1': 0.0, 'PC2': 0.0, 'IC2': 0.0, 'PC3': 0.0, 'IC3': 0.0}),
    (240, 1200, 20.0, {'AIC': 1.0, 'BIC': 0.0, 'GIC': 1.0, 'PC1': 0.0, 'IC1': 0.0, 'PC2': 0.0, 'IC2': 0.0, 'PC3': 0.0, 'IC3': 0.0}),
    (240, 1200, 25.0, {'AIC': 1.0, 'BIC': 0.0, 'GIC': 1.0, 'PC1': 0.0, 'IC1': 0.0, 'PC2': 0.0, 'IC2': 0.0, 'PC3': 0.06, 'IC3': 0.13}),
    (240, 1200, 30.0, {'AIC': 1.0, 'BIC': 0.092, 'GIC': 1.0, 'PC1': 0.062, 'IC1': 0.108, 'PC2': 0.022, 'IC2': 0.034, 'PC3': 0.858, 'IC3': 0.912}),
    (240, 1200, 35.0, {'AIC': 1.0, 'BIC': 0.856, 'GIC': 1.0, 'PC1': 0.8, 'IC1': 0.872, 'PC2': 0.562, 'IC2': 0.692, 'PC3': 1.0, 'IC3': 1.0}),
]
