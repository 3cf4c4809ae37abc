"""sutured-kit: combinatorial and algebraic invariants of balanced sutured
3-manifolds.

Modules:

- ``abelian``: Smith normal form, finitely generated abelian groups, group rings
- ``fox``: free words, Fox derivatives, torsion of balanced presentations
- ``diagram``: sutured Heegaard diagrams, generators, Spin^c partition, domains
- ``polytope``: exact support polytopes, faces, support function, rank bounds
- ``maslov``: Maslov loop indices and spectral flow of symmetric paths
- ``oracle``: closed-form rank tables used as ground truth
- ``fixtures``: bundled example data tying the modules together
- ``cli``: the ``sutured-kit`` command
"""

__version__ = "0.1.0"

from . import abelian, diagram, errors, fixtures, fox, maslov, oracle, polytope  # noqa: F401
