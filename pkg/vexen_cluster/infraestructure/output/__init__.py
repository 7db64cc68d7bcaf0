"""Output adapters: caches, reports and persistence."""
