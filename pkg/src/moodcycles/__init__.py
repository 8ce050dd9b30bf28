"""Hourly mood-score time series from geo-located short-text corpora.

Pipeline: ingest record files -> tokenize and stem -> count lexicon stems
per hourly bin -> standardized mood scores -> circadian profiles and
significance tests (permutation, bootstrap, autocorrelation).
"""

__version__ = "0.1.0"
