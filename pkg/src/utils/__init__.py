"""Logger setup shared by the CLI and the services"""
