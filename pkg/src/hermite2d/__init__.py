"""2D complex Hermite polynomials, Kibble-Slepian expansions, integral
representations and q-analogues, with a seeded verification harness."""

__version__ = "0.1.0"
