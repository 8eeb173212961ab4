"""
Works out the topology of the D5 catalog and renders its diagrams.

Prints every module with its stable annihilator and a verified homotopy
for each generator, then the closed sets, and writes the Hasse diagram
of the closed sets as well as the Kolmogorov quotient to DOT files in
the current folder. Render them with, e.g., `dot -Tsvg D5_closed.dot`.
"""

import stann
from pathlib import Path


points = stann.load_catalog('D5')
for point in points:
    print(f'{point.label}: {point.annihilator}')
    for g in point.annihilator.basis:
        (found, witness) = stann.is_nullhomotopic(point.mf, g, witness=True)
        assert found and stann.verify_homotopy(point.mf, g, witness)
        print(f'    {stann.format_polynomial(g)}: {witness}')

space = stann.build_space(points)
lattice = stann.enumerate_closed_sets(space)
print(f'{len(lattice)} closed sets:')
for (number, label) in enumerate(lattice.node_labels(), 1):
    print(f'{number:3}  {label}')

(compact, witness, minimum) = stann.is_compact(space)
if compact:
    print(f'Minimum {minimum} attained by {space.points[witness].label}.')

Path('D5_closed.dot').write_text(stann.to_dot(lattice, 'D5_closed'),
                                 encoding='utf-8')
Path('D5_poset.dot').write_text(stann.to_dot(stann.kolmogorov_poset(space), 'D5_poset'),
                                encoding='utf-8')
