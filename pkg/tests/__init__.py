"""Tests package for transplant medication adherence system."""
