"""raptorbound - bounds and Monte Carlo verification for q-ary Raptor codes under ML decoding."""

__version__ = "0.1.0"
