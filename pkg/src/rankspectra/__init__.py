"""Rank estimation for high-dimensional spiked covariance models.

Modules:

* :mod:`rankspectra.rmt_core` — generalized Marchenko-Pastur law: ``psi``, edges, density, ``kappa``.
* :mod:`rankspectra.spectra` — sample covariance / correlation spectra and matrix I/O.
* :mod:`rankspectra.criteria` — AIC, BIC, GIC, PC1-3, IC1-3.
* :mod:`rankspectra.alt_estimators` — ACT, DPA, BEMA, ED, ON, ER, GR.
* :mod:`rankspectra.simgen` — scenario generation and replicated accuracy studies.
* :mod:`rankspectra.gap_analyzer` — finite-sample gap conditions, tables and curves.
* :mod:`rankspectra.cli` — the ``rankspectra`` command.
"""

from __future__ import annotations

__version__ = "0.1.0"
