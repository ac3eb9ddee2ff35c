"""Environment-backed settings for the kernel limits and logging"""
