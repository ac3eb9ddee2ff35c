"""Wire formats for elements, posets and series"""
