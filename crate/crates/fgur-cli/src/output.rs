//! Tabular scan output: CSV emission and a static SVG line plot.

use std::fs;
use std::path::Path;

use crate::CliError;

/// Numeric scan results: named columns, one `Vec<f64>` per row.
///
/// Row order is fixed at construction time (ascending sweep variable per
/// block), so re-running the same scan produces byte-identical output.
#[derive(Debug, Clone, PartialEq)]
pub struct ScanTable {
    columns: Vec<String>,
    rows: Vec<Vec<f64>>,
}

impl ScanTable {
    pub fn new(columns: &[&str]) -> Self {
        ScanTable {
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push_row(&mut self, row: Vec<f64>) {
        assert_eq!(row.len(), self.columns.len(), "row width mismatch");
        self.rows.push(row);
    }

    pub fn columns(&self) -> &[String] {
        &self.columns
    }

    pub fn rows(&self) -> &[Vec<f64>] {
        &self.rows
    }

    pub fn column_index(&self, name: &str) -> Option<usize> {
        self.columns.iter().position(|c| c == name)
    }

    /// Appends the rows of another table with identical columns.
    pub fn extend(&mut self, other: ScanTable) {
        assert_eq!(self.columns, other.columns, "column mismatch");
        self.rows.extend(other.rows);
    }

    /// Renders the table as CSV with 12 significant digits per value.
    pub fn to_csv(&self) -> String {
        let mut out = self.columns.join(",");
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|v| format!("{v:.11e}")).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    pub fn write_csv(&self, path: &Path) -> Result<(), CliError> {
        fs::write(path, self.to_csv()).map_err(|source| CliError::Io {
            path: path.to_path_buf(),
            source,
        })
    }
}

/// What to plot from a [`ScanTable`].
#[derive(Debug, Clone)]
pub struct PlotSpec<'a> {
    /// Column providing the horizontal axis.
    pub x_col: &'a str,
    /// Columns plotted as one polyline each (per group).
    pub y_cols: Vec<&'a str>,
    /// Optional column whose distinct values split the rows into series
    /// groups (e.g. one curve family per Unruh-mode weight).
    pub group_col: Option<&'a str>,
    /// Plot title.
    pub title: &'a str,
    /// Vertical axis label.
    pub y_label: &'a str,
}

const SVG_WIDTH: f64 = 800.0;
const SVG_HEIGHT: f64 = 560.0;
const MARGIN_LEFT: f64 = 70.0;
const MARGIN_RIGHT: f64 = 180.0;
const MARGIN_TOP: f64 = 40.0;
const MARGIN_BOTTOM: f64 = 55.0;

const PALETTE: [&str; 6] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b",
];
const DASHES: [&str; 3] = ["none", "8,4", "2,3"];

/// Renders a static line plot of the table as an SVG document.
///
/// One polyline is drawn per (group value, y column) combination; at
/// least two rows are required.
pub fn render_svg(table: &ScanTable, spec: &PlotSpec) -> Result<String, CliError> {
    if table.rows().len() < 2 {
        return Err(CliError::Usage(
            "an svg plot needs at least two scan rows".into(),
        ));
    }
    let x_idx = table
        .column_index(spec.x_col)
        .ok_or_else(|| CliError::Usage(format!("unknown x column `{}`", spec.x_col)))?;
    let mut y_idx = Vec::new();
    for col in &spec.y_cols {
        y_idx.push(
            table
                .column_index(col)
                .ok_or_else(|| CliError::Usage(format!("unknown y column `{col}`")))?,
        );
    }
    let group_idx = match spec.group_col {
        Some(col) => Some(
            table
                .column_index(col)
                .ok_or_else(|| CliError::Usage(format!("unknown group column `{col}`")))?,
        ),
        None => None,
    };

    // distinct group values in first-encounter order
    let mut groups: Vec<Option<f64>> = Vec::new();
    match group_idx {
        Some(g) => {
            for row in table.rows() {
                if !groups.iter().any(|v| v.unwrap() == row[g]) {
                    groups.push(Some(row[g]));
                }
            }
        }
        None => groups.push(None),
    }

    let mut x_min = f64::INFINITY;
    let mut x_max = f64::NEG_INFINITY;
    let mut y_min = f64::INFINITY;
    let mut y_max = f64::NEG_INFINITY;
    for row in table.rows() {
        x_min = x_min.min(row[x_idx]);
        x_max = x_max.max(row[x_idx]);
        for &i in &y_idx {
            y_min = y_min.min(row[i]);
            y_max = y_max.max(row[i]);
        }
    }
    if x_max == x_min {
        x_max = x_min + 1.0;
    }
    let pad = 0.05 * (y_max - y_min).max(1e-9);
    y_min -= pad;
    y_max += pad;

    let plot_w = SVG_WIDTH - MARGIN_LEFT - MARGIN_RIGHT;
    let plot_h = SVG_HEIGHT - MARGIN_TOP - MARGIN_BOTTOM;
    let to_px = |x: f64, y: f64| {
        (
            MARGIN_LEFT + (x - x_min) / (x_max - x_min) * plot_w,
            MARGIN_TOP + (y_max - y) / (y_max - y_min) * plot_h,
        )
    };

    let mut svg = String::new();
    svg.push_str(r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    svg.push('\n');
    svg.push_str(&format!(
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SVG_WIDTH}" height="{SVG_HEIGHT}" viewBox="0 0 {SVG_WIDTH} {SVG_HEIGHT}">"#
    ));
    svg.push('\n');
    svg.push_str(&format!(
        r#"<rect x="0" y="0" width="{SVG_WIDTH}" height="{SVG_HEIGHT}" fill="white"/>"#
    ));
    svg.push('\n');
    svg.push_str(&format!(
        r#"<text x="{:.2}" y="{:.2}" font-family="sans-serif" font-size="16" text-anchor="middle">{}</text>"#,
        MARGIN_LEFT + plot_w / 2.0,
        MARGIN_TOP - 15.0,
        spec.title
    ));
    svg.push('\n');

    // axes
    svg.push_str(&format!(
        r#"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="black"/>"#,
        MARGIN_LEFT,
        MARGIN_TOP + plot_h,
        MARGIN_LEFT + plot_w,
        MARGIN_TOP + plot_h
    ));
    svg.push('\n');
    svg.push_str(&format!(
        r#"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="black"/>"#,
        MARGIN_LEFT,
        MARGIN_TOP,
        MARGIN_LEFT,
        MARGIN_TOP + plot_h
    ));
    svg.push('\n');

    // ticks and labels
    for t in 0..=5 {
        let frac = t as f64 / 5.0;
        let x_val = x_min + frac * (x_max - x_min);
        let (px, _) = to_px(x_val, y_min);
        svg.push_str(&format!(
            r#"<line x1="{px:.2}" y1="{:.2}" x2="{px:.2}" y2="{:.2}" stroke="black"/>"#,
            MARGIN_TOP + plot_h,
            MARGIN_TOP + plot_h + 5.0
        ));
        svg.push('\n');
        svg.push_str(&format!(
            r#"<text x="{px:.2}" y="{:.2}" font-family="sans-serif" font-size="11" text-anchor="middle">{x_val:.3}</text>"#,
            MARGIN_TOP + plot_h + 18.0
        ));
        svg.push('\n');
        let y_val = y_min + frac * (y_max - y_min);
        let (_, py) = to_px(x_min, y_val);
        svg.push_str(&format!(
            r#"<line x1="{:.2}" y1="{py:.2}" x2="{:.2}" y2="{py:.2}" stroke="black"/>"#,
            MARGIN_LEFT - 5.0,
            MARGIN_LEFT
        ));
        svg.push('\n');
        svg.push_str(&format!(
            r#"<text x="{:.2}" y="{:.2}" font-family="sans-serif" font-size="11" text-anchor="end">{y_val:.4}</text>"#,
            MARGIN_LEFT - 8.0,
            py + 4.0
        ));
        svg.push('\n');
    }
    svg.push_str(&format!(
        r#"<text x="{:.2}" y="{:.2}" font-family="sans-serif" font-size="13" text-anchor="middle">{}</text>"#,
        MARGIN_LEFT + plot_w / 2.0,
        SVG_HEIGHT - 12.0,
        spec.x_col
    ));
    svg.push('\n');
    svg.push_str(&format!(
        r#"<text x="18" y="{:.2}" font-family="sans-serif" font-size="13" text-anchor="middle" transform="rotate(-90 18 {:.2})">{}</text>"#,
        MARGIN_TOP + plot_h / 2.0,
        MARGIN_TOP + plot_h / 2.0,
        spec.y_label
    ));
    svg.push('\n');

    // one polyline per (group, column)
    let mut series = 0usize;
    for group in &groups {
        for (ci, (&col_idx, col_name)) in y_idx.iter().zip(spec.y_cols.iter()).enumerate() {
            let color = PALETTE[series % PALETTE.len()];
            let dash = DASHES[ci % DASHES.len()];
            let mut points = String::new();
            for row in table.rows() {
                if let (Some(g), Some(val)) = (group_idx, *group) {
                    if row[g] != val {
                        continue;
                    }
                }
                let (px, py) = to_px(row[x_idx], row[col_idx]);
                points.push_str(&format!("{px:.2},{py:.2} "));
            }
            svg.push_str(&format!(
                r#"<polyline fill="none" stroke="{color}" stroke-width="1.5" stroke-dasharray="{dash}" points="{}"/>"#,
                points.trim_end()
            ));
            svg.push('\n');

            let label = match (spec.group_col, group) {
                (Some(gc), Some(gv)) => format!("{col_name} {gc}={gv}"),
                _ => col_name.to_string(),
            };
            let ly = MARGIN_TOP + 14.0 + 18.0 * series as f64;
            svg.push_str(&format!(
                r#"<line x1="{:.2}" y1="{ly:.2}" x2="{:.2}" y2="{ly:.2}" stroke="{color}" stroke-width="1.5" stroke-dasharray="{dash}"/>"#,
                SVG_WIDTH - MARGIN_RIGHT + 12.0,
                SVG_WIDTH - MARGIN_RIGHT + 40.0
            ));
            svg.push('\n');
            svg.push_str(&format!(
                r#"<text x="{:.2}" y="{:.2}" font-family="sans-serif" font-size="11">{label}</text>"#,
                SVG_WIDTH - MARGIN_RIGHT + 46.0,
                ly + 4.0
            ));
            svg.push('\n');
            series += 1;
        }
    }

    svg.push_str("</svg>\n");
    Ok(svg)
}

/// Renders and writes the plot to a file.
pub fn write_svg(table: &ScanTable, spec: &PlotSpec, path: &Path) -> Result<(), CliError> {
    let svg = render_svg(table, spec)?;
    fs::write(path, svg).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}
