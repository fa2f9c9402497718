"""
レポート出力モジュール

CLI のレポート（dict）を人が読むテキストに、グラフと証拠を Graphviz DOT に変換します。
"""

import logging
from typing import Any, Dict, Optional

from jinja2 import Template

from src.models import Graph, StrongEdgeColoring
from src.models.graph import canonical_edge

logger = logging.getLogger(__name__)

# DOT の辺色（strong 辺彩色の色番号を循環して割り当てる）
PALETTE = (
    '#e41a1c', '#377eb8', '#4daf4a', '#984ea3', '#ff7f00', '#a65628',
    '#f781bf', '#999999', '#66c2a5', '#fc8d62', '#8da0cb', '#e78ac3'
)

KINDS = ('recognize', 'color', 'verify', 'oracle', 'audit')


class ReportRenderer:
    """
    レポートをテキスト / DOT に変換するクラス

    【使用例】
    ReportRenderer().render('recognize', report)
    ReportRenderer().render_dot(graph, witness=report['witness'])
    """

    def render(self, kind: str, report: Dict[str, Any]) -> str:
        """
        レポートをテキストに変換

        パラメータ:
            kind (str): 'recognize' / 'color' / 'verify' / 'oracle' / 'audit'
            report (dict): 各コマンドの JSON レポート

        戻り値:
            str: 末尾改行付きのテキスト
        """
        if kind not in KINDS:
            raise ValueError(f"未知のレポート種別です: '{kind}'")
        template = Template(self._get_template(kind), trim_blocks=True, lstrip_blocks=True)
        return template.render(r=report).rstrip('\n') + '\n'

    def render_dot(
        self,
        g: Graph,
        witness: Optional[Dict[str, Any]] = None,
        coloring: Optional[StrongEdgeColoring] = None,
        name: str = 'G'
    ) -> str:
        """
        グラフを DOT に変換

        witness（弦と閉路）があれば弦を赤の太線、閉路の辺を青で描く。
        coloring があれば辺に色番号を付けて塗り分ける。
        """
        highlighted: Dict[tuple, Dict[str, str]] = {}
        if witness:
            cycle = witness.get('cycle') or []
            for x, y in zip(cycle, cycle[1:] + cycle[:1]):
                highlighted[canonical_edge(x, y)] = {'color': '#377eb8', 'penwidth': '2'}
            if witness.get('chord'):
                highlighted[canonical_edge(*witness['chord'])] = {'color': '#e41a1c', 'penwidth': '3'}

        edges = []
        for u, v in g.sorted_edges():
            attrs: Dict[str, str] = {}
            if coloring is not None and (u, v) in coloring.colors:
                c = coloring.colors[(u, v)]
                attrs = {'label': str(c), 'color': PALETTE[(c - 1) % len(PALETTE)]}
            attrs.update(highlighted.get((u, v), {}))
            edges.append({'u': u, 'v': v, 'attrs': attrs})

        template = Template(self._get_template('dot'), trim_blocks=True, lstrip_blocks=True)
        return template.render(
            name=name,
            nodes=[{'id': v, 'label': g.label(v)} for v in g.vertices()],
            edges=edges
        )

    def _get_template(self, style: str) -> str:
        """
        テンプレート文字列を取得

        パラメータ:
            style (str): レポート種別または 'dot'
        """
        if style == 'recognize':
            return self._get_recognize_template()
        elif style == 'color':
            return self._get_color_template()
        elif style == 'verify':
            return self._get_verify_template()
        elif style == 'oracle':
            return self._get_oracle_template()
        elif style == 'audit':
            return self._get_audit_template()
        else:
            return self._get_dot_template()

    def _get_recognize_template(self) -> str:
        return '''chordless: {{ 'true' if r.chordless else 'false' }}, Δ={{ r.delta }}, minimally-2-connected: {{ 'true' if r.minimally_2_connected else 'false' }}
vertices: {{ r.n }}, edges: {{ r.m }}, blocks: {{ r.blocks }}, cutvertices: {{ r.cutvertices }}, leafblocks: {{ r.leafblocks }}
{% if r.chordless %}
strong chromatic index bound: {{ r.bound }}
{% elif r.witness %}
chord: {{ r.witness.chord[0] }}-{{ r.witness.chord[1] }}, cycle: {{ r.witness.cycle | join(' ') }}
{% endif %}
'''

    def _get_color_template(self) -> str:
        return '''valid: {{ 'true' if r.valid else 'false' }}
colors used: {{ r.colors_used }} (bound {{ r.bound_claimed }}, Δ={{ r.delta }})
edge-coloring path: {{ r.edge_coloring_path }}
{% for c in r.classes %}
  class {{ c.color }} [component {{ c.component }}]: |M|={{ c.matching_size }}, quotient {{ c.quotient_vertices }}/{{ c.quotient_edges }}, red {{ c.red_edges }}, blue {{ c.blue_edges }}, colors {{ c.colors_used }}
{% endfor %}
'''

    def _get_verify_template(self) -> str:
        return '''{% if r.valid %}
valid: true, colors used: {{ r.colors_used }}
{% elif r.reason == 'coverage' %}
valid: false, uncolored edges: {% for e in r.missing %}{{ e | join('-') }}{{ ' ' if not loop.last }}{% endfor %}

{% else %}
valid: false, edges {{ r.edges[0] | join('-') }} and {{ r.edges[1] | join('-') }} share color {{ r.color }} ({{ r.reason }}{% if r.link %} via {{ r.link | join('-') }}{% endif %})
{% endif %}
'''

    def _get_oracle_template(self) -> str:
        return '''{% if r.status == 'optimal' %}
χ's = {{ r.value }} ({{ r.nodes }} nodes)
{% else %}
{{ r.status }}: {{ r.lower }} ≤ χ's ≤ {{ r.upper }}
{% endif %}
'''

    def _get_audit_template(self) -> str:
        return '''audit: {{ 'passed' if r.passed else 'failed' }} ({{ r.graphs }} graphs, seed {{ r.corpus.seed }})
{% for c in r.checks %}
  {{ '✅' if c.passed else '❌' }} {{ c.name }}: {{ c.instances }} instances{% if not c.passed %}, {{ c.failures }} failures{% endif %}

{% endfor %}
'''

    def _get_dot_template(self) -> str:
        return '''graph {{ name }} {
  node [shape=circle];
{% for node in nodes %}
  {{ node.id }} [label="{{ node.label }}"];
{% endfor %}
{% for e in edges %}
  {{ e.u }} -- {{ e.v }}{% if e.attrs %} [{% for k, v in e.attrs | dictsort %}{{ k }}="{{ v }}"{{ ", " if not loop.last }}{% endfor %}]{% endif %};
{% endfor %}
}
'''
