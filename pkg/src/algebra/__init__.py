"""Exact kernel for QSym^(l), NSym^(l), FQSym^(l) and multigraded posets"""
