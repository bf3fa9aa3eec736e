"""
The identity catalog. Importing this package registers every record.
"""
from identities.catalog import catalan, jacobsthal, kanalog, polynomials, qdeform  # noqa: F401
