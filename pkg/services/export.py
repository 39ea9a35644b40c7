"""
JSON and DOT rendering of a 4-block tree
"""

from typing import List

from models import FourBlockTree
from schemas.tree import ComponentDocument, ComponentVertex, FourBlockTreeDocument, ParentRef


def tree_to_document(tree: FourBlockTree) -> FourBlockTreeDocument:
    components: List[ComponentDocument] = []
    for component in tree.components:
        rotation = component.rotation()
        parent = None
        if component.parent is not None:
            parent = ParentRef(id=component.parent, face=component.parent_face)
        components.append(
            ComponentDocument(
                id=component.id,
                outer_face=component.outer_face(),
                vertices=[
                    ComponentVertex(local_id=i, origin_id=origin) for i, origin in enumerate(component.origins())
                ],
                rotation=[rotation[i] for i in range(len(component.vertices))],
                parent=parent,
            )
        )
    return FourBlockTreeDocument(root=tree.root, components=components)


def tree_to_json(tree: FourBlockTree) -> str:
    return tree_to_document(tree).model_dump_json(indent=2)


def tree_to_dot(tree: FourBlockTree) -> str:
    """One node per component labeled with its size, one arrow per link labeled with the face"""
    lines = ["digraph four_block_tree {", "  node [shape=box];"]
    for component in tree.components:
        role = "root, " if component.id == tree.root else ""
        lines.append(f'  c{component.id} [label="C{component.id} ({role}{len(component.vertices)} vertices)"];')
    for link in tree.links:
        face = " ".join(str(v) for v in link.face)
        lines.append(f'  c{link.parent} -> c{link.child} [label="{face}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
