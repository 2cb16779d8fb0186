"""Exact geodetic/hull numbers and boundary-type sets of strong product graphs."""
