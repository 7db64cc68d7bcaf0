"""Input adapters: command line, CSV files and synthetic datasets."""
