"""Multigraded combinatorial Hopf algebras with exact arithmetic"""
