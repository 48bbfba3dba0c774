"""Readers and writers for diagram files and exported results"""
