# Performance tests module
