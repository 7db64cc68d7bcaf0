"""Cache adapters for similarity matrices and intermediate results."""
