//! Criterion benchmarks for the sieve, type enumeration and fusion tables.
