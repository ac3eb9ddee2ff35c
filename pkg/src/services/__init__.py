"""Service layer: one class per command family, each returning a CommandResult"""
