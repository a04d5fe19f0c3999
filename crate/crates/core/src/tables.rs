//! Reference tables of worked examples, recomputed and compared cell by cell
//! against embedded expected values.
//!
//! The first table lists the topological realizations (H₁(L), H²(L)_tors, E),
//! the second the resolution and monodromy ones (Λ∨/Λ, |det M|,
//! |det(T − id)|).

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::decimal;
use crate::error::Result;
use crate::graph::AdeKind;
use crate::group::FiniteAbelianGroup;
use crate::report::{compute_report, ObstructionReport, Realization, Route};
use crate::spec::SingularitySpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Column {
    H1,
    H2Torsion,
    Obstruction,
    Discriminant,
    DetM,
    DetTMinusId,
}

impl Column {
    pub const ALL: [Column; 6] = [
        Column::H1,
        Column::H2Torsion,
        Column::Obstruction,
        Column::Discriminant,
        Column::DetM,
        Column::DetTMinusId,
    ];

    pub fn header(self) -> &'static str {
        match self {
            Column::H1 => "H_1(L)",
            Column::H2Torsion => "H^2(L)_tors",
            Column::Obstruction => "E",
            Column::Discriminant => "disc(Lambda)",
            Column::DetM => "|det M|",
            Column::DetTMinusId => "|det(T - id)|",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum CellValue {
    Group {
        group: FiniteAbelianGroup,
    },
    /// A group known only through its order.
    Order {
        #[serde(with = "decimal::single")]
        order: BigInt,
    },
    Number {
        #[serde(with = "decimal::single")]
        value: BigInt,
    },
    /// The entry is deliberately empty (`---`).
    Absent,
    /// The entry could not be filled because the routes disagree.
    Conflict {
        detail: String,
    },
}

impl CellValue {
    fn group(factors: &[u64]) -> Self {
        CellValue::Group {
            group: FiniteAbelianGroup::from_invariant_factors(
                factors.iter().map(|&f| BigInt::from(f)).collect(),
            )
            .expect("embedded factors are normalized"),
        }
    }

    fn cyclic(n: u64) -> Self {
        CellValue::Group {
            group: FiniteAbelianGroup::cyclic(n).expect("embedded orders are positive"),
        }
    }

    fn order(n: u64) -> Self {
        CellValue::Order { order: n.into() }
    }

    fn number(n: u64) -> Self {
        CellValue::Number { value: n.into() }
    }

    fn from_realization(r: &Realization) -> Self {
        match r {
            Realization::Group { group, .. } => CellValue::Group {
                group: group.clone(),
            },
            Realization::Order { order, .. } => CellValue::Order {
                order: order.clone(),
            },
            Realization::NotApplicable { .. } => CellValue::Absent,
        }
    }

    fn group_order(&self) -> Option<&BigInt> {
        match self {
            CellValue::Group { group } => Some(group.order()),
            CellValue::Order { order } => Some(order),
            _ => None,
        }
    }

    /// Exact agreement. A group and an order-only value agree when the orders
    /// are equal.
    pub fn agrees_with(&self, other: &CellValue) -> bool {
        use CellValue::*;
        match (self, other) {
            (Group { group: a }, Group { group: b }) => a == b,
            (Group { .. } | Order { .. }, Group { .. } | Order { .. }) => {
                self.group_order() == other.group_order()
            }
            (Number { value: a }, Number { value: b }) => a == b,
            (Absent, Absent) => true,
            _ => false,
        }
    }

    pub fn render(&self) -> String {
        match self {
            CellValue::Group { group } => group.to_string(),
            CellValue::Order { order } => format!("order {order}"),
            CellValue::Number { value } => value.to_string(),
            CellValue::Absent => "---".to_string(),
            CellValue::Conflict { .. } => "CONFLICT".to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cell {
    pub column: Column,
    pub computed: CellValue,
    pub expected: CellValue,
    /// Filled through the identification with E rather than computed on its
    /// own route.
    pub inferred: bool,
    pub matches: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub label: String,
    pub spec: SingularitySpec,
    pub cells: Vec<Cell>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Discrepancy {
    pub row: String,
    pub column: Column,
    pub computed: String,
    pub expected: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableDocument {
    pub rows: Vec<TableRow>,
    pub discrepancies: Vec<Discrepancy>,
}

struct ExpectedRow {
    label: String,
    spec: SingularitySpec,
    cells: [CellValue; 6],
}

fn expected_rows() -> Vec<ExpectedRow> {
    let spec = |s: Result<SingularitySpec>| s.expect("embedded specs are valid");
    let mut rows = Vec::new();
    for k in [1u64, 2, 3, 5, 8] {
        let g = CellValue::cyclic(k + 1);
        rows.push(ExpectedRow {
            label: format!("A_{k}"),
            spec: spec(SingularitySpec::ade(AdeKind::A, k as u32)),
            cells: [
                g.clone(),
                g.clone(),
                g.clone(),
                g,
                CellValue::number(k + 1),
                CellValue::number(k + 1),
            ],
        });
    }
    for n in [4u32, 5, 6, 7] {
        let g = if n % 2 == 0 {
            CellValue::group(&[2, 2])
        } else {
            CellValue::cyclic(4)
        };
        rows.push(ExpectedRow {
            label: format!("D_{n}"),
            spec: spec(SingularitySpec::ade(AdeKind::D, n)),
            cells: [
                g.clone(),
                CellValue::order(4),
                CellValue::order(4),
                g,
                CellValue::number(4),
                CellValue::number(4),
            ],
        });
    }
    for (n, d) in [(6u32, 3u64), (7, 2), (8, 1)] {
        let g = CellValue::cyclic(d);
        rows.push(ExpectedRow {
            label: format!("E_{n}"),
            spec: spec(SingularitySpec::ade(AdeKind::E, n)),
            cells: [
                g.clone(),
                g.clone(),
                g.clone(),
                g,
                CellValue::number(d),
                CellValue::number(d),
            ],
        });
    }
    let z5 = CellValue::cyclic(5);
    rows.push(ExpectedRow {
        label: "C^2/(1/5)(1,2)".into(),
        spec: spec(SingularitySpec::cyclic_quotient(5, 2)),
        cells: [
            z5.clone(),
            z5.clone(),
            z5.clone(),
            z5.clone(),
            CellValue::number(5),
            CellValue::Absent,
        ],
    });
    let zero = CellValue::cyclic(1);
    rows.push(ExpectedRow {
        label: "x^2+y^3+z^7".into(),
        spec: spec(SingularitySpec::brieskorn_pham(2, 3, 7)),
        cells: [
            zero.clone(),
            zero.clone(),
            zero.clone(),
            zero,
            CellValue::number(1),
            CellValue::number(1),
        ],
    });
    rows.push(ExpectedRow {
        label: "x^2+y^3+z^11".into(),
        spec: spec(SingularitySpec::brieskorn_pham(2, 3, 11)),
        cells: [
            z5.clone(),
            z5.clone(),
            z5.clone(),
            z5,
            CellValue::number(5),
            CellValue::number(5),
        ],
    });
    rows
}

fn conflict(report: &ObstructionReport) -> CellValue {
    let detail = match &report.mismatch {
        Some(m) => format!(
            "{} gives {} but {} gives {}",
            m.first, m.first_value, m.second, m.second_value
        ),
        None => "no applicable route".to_string(),
    };
    CellValue::Conflict { detail }
}

/// (value, inferred) for each column.
fn computed_cells(report: &ObstructionReport) -> [(CellValue, bool); 6] {
    let link = report
        .realization(Route::LinkTopology)
        .map_or(CellValue::Absent, CellValue::from_realization);
    let e = report
        .consensus()
        .map_or_else(|| conflict(report), CellValue::from_realization);

    let discriminant = match report.realization(Route::ResolutionLattice) {
        Some(r) if r.is_applicable() => (CellValue::from_realization(r), false),
        _ => (e.clone(), true),
    };
    let det_m = match (&report.det_m, e.group_order()) {
        (Some(d), _) => (CellValue::Number { value: d.abs() }, false),
        (None, Some(order)) => (
            CellValue::Number {
                value: order.clone(),
            },
            true,
        ),
        (None, None) => (conflict(report), true),
    };
    let det_t = match (&report.det_t_minus_id, &report.determinant_refusal) {
        (Some(d), _) => CellValue::Number { value: d.abs() },
        (None, Some(reason)) => CellValue::Conflict {
            detail: reason.clone(),
        },
        (None, None) => CellValue::Absent,
    };
    [
        (link.clone(), false),
        (link, false),
        (e, false),
        discriminant,
        det_m,
        (det_t, false),
    ]
}

/// Recomputes every row and compares it with the embedded expected values.
pub fn reproduce_tables() -> Result<TableDocument> {
    let mut rows = Vec::new();
    let mut discrepancies = Vec::new();
    for expected in expected_rows() {
        let report = compute_report(&expected.spec)?;
        let computed = computed_cells(&report);
        let mut cells = Vec::with_capacity(6);
        for ((column, (value, inferred)), want) in
            Column::ALL.into_iter().zip(computed).zip(expected.cells)
        {
            let matches = value.agrees_with(&want);
            if !matches {
                let shown = match &value {
                    CellValue::Conflict { detail } => format!("conflict ({detail})"),
                    other => other.render(),
                };
                discrepancies.push(Discrepancy {
                    row: expected.label.clone(),
                    column,
                    computed: shown,
                    expected: want.render(),
                });
            }
            cells.push(Cell {
                column,
                computed: value,
                expected: want,
                inferred,
                matches,
            });
        }
        rows.push(TableRow {
            label: expected.label,
            spec: expected.spec,
            cells,
        });
    }
    Ok(TableDocument {
        rows,
        discrepancies,
    })
}

impl TableDocument {
    pub fn is_exact(&self) -> bool {
        self.discrepancies.is_empty()
    }

    pub fn row(&self, label: &str) -> Option<&TableRow> {
        self.rows.iter().find(|r| r.label == label)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("table serialization cannot fail")
    }

    /// Both tables as aligned text, followed by the list of discrepancies.
    /// `*` marks values filled through E, `!` marks cells that differ from
    /// the expected value.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let titles = [
            "Topological realizations",
            "Resolution and monodromy realizations",
        ];
        for (title, columns) in titles
            .into_iter()
            .zip([&Column::ALL[..3], &Column::ALL[3..]])
        {
            let mut grid = vec![std::iter::once("singularity".to_string())
                .chain(columns.iter().map(|c| c.header().to_string()))
                .collect::<Vec<_>>()];
            for row in &self.rows {
                let mut line = vec![row.label.clone()];
                for cell in row.cells.iter().filter(|c| columns.contains(&c.column)) {
                    let mut text = cell.computed.render();
                    if cell.inferred {
                        text.push('*');
                    }
                    if !cell.matches {
                        text.push_str(" !");
                    }
                    line.push(text);
                }
                grid.push(line);
            }
            let widths: Vec<usize> = (0..grid[0].len())
                .map(|i| grid.iter().map(|r| r[i].chars().count()).max().unwrap_or(0))
                .collect();
            let _ = writeln!(out, "{title}");
            for (i, line) in grid.iter().enumerate() {
                let cells: Vec<String> = line
                    .iter()
                    .zip(&widths)
                    .map(|(c, &w)| format!("{c:<w$}"))
                    .collect();
                let _ = writeln!(out, "{}", cells.join(" | ").trim_end());
                if i == 0 {
                    let rule: Vec<String> = widths.iter().map(|&w| "-".repeat(w)).collect();
                    let _ = writeln!(out, "{}", rule.join("-+-"));
                }
            }
            out.push('\n');
        }
        out.push_str("* filled through the identification with E\n");
        if self.is_exact() {
            out.push_str("all cells match the expected values\n");
        } else {
            let _ = writeln!(
                out,
                "{} cell(s) differ from the expected values:",
                self.discrepancies.len()
            );
            for d in &self.discrepancies {
                let _ = writeln!(
                    out,
                    "  {} / {}: computed {}, expected {}",
                    d.row,
                    d.column.header(),
                    d.computed,
                    d.expected
                );
            }
        }
        out
    }
}
