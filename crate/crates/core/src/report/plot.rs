//! Plot-file emission: a tab-separated `.dat` with the plotted values (NA as
//! `?`) and a `.gp` gnuplot script that references it. Rendering stays out of
//! process; any gnuplot can turn the pair into an image.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::dataset::Obs;
use crate::diagnostics::Correlogram;
use crate::report::fmt::fmt_f;

fn data_cell(v: Obs) -> String {
    match v {
        Some(x) => format!("{:.12e}", x),
        None => "?".into(),
    }
}

fn dat_from_columns(columns: &[&[Obs]]) -> String {
    let rows = columns.first().map_or(0, |c| c.len());
    let mut out = String::new();
    for r in 0..rows {
        let cells: Vec<String> = columns.iter().map(|c| data_cell(c[r])).collect();
        out.push_str(&cells.join("\t"));
        out.push('\n');
    }
    out
}

/// `gnuplot` command: every series is one column of the `.dat`.
/// Returns `(dat_contents, gp_contents)`.
pub fn line_plot(
    basename: &str,
    names: &[&str],
    columns: &[&[Obs]],
    start_label: i64,
    with_lines: bool,
    time_series: bool,
) -> (String, String) {
    let dat = dat_from_columns(columns);
    let style = if with_lines { "lines" } else { "points" };
    let mut gp = String::new();
    gp.push_str("set terminal pngcairo size 840,560\n");
    gp.push_str(&format!("set output '{}.png'\n", basename));
    gp.push_str("set missing '?'\nset key left top\n");
    if time_series {
        gp.push_str(&format!("set xlabel 'periodo'\nset xrange [{}:*]\n", start_label));
    }
    let plots: Vec<String> = names
        .iter()
        .enumerate()
        .map(|(i, n)| {
            format!(
                "'{}.dat' using ($0+{}):{} with {} title '{}'",
                basename,
                start_label,
                i + 1,
                style,
                n
            )
        })
        .collect();
    gp.push_str(&format!("plot {}\n", plots.join(", \\\n     ")));
    (dat, gp)
}

/// One `scatters` panel: the series against the period.
pub fn scatter_panel(basename: &str, name: &str, column: &[Obs], start_label: i64) -> (String, String) {
    let dat = dat_from_columns(&[column]);
    let mut gp = String::new();
    gp.push_str("set terminal pngcairo size 640,420\n");
    gp.push_str(&format!("set output '{}.png'\n", basename));
    gp.push_str("set missing '?'\nset nokey\n");
    gp.push_str(&format!("set title '{}'\nset xlabel 'periodo'\n", name));
    gp.push_str(&format!(
        "plot '{}.dat' using ($0+{}):1 with lines\n",
        basename, start_label
    ));
    (dat, gp)
}

/// Correlogram plot: lag, ACF and PACF columns plus the confidence band.
pub fn correlogram_plot(basename: &str, c: &Correlogram) -> (String, String) {
    let mut dat = String::new();
    for i in 0..c.max_lag {
        dat.push_str(&format!(
            "{}\t{}\t{}\n",
            i + 1,
            fmt_f(c.acf[i], 10),
            fmt_f(c.pacf[i], 10)
        ));
    }
    let band = c.band;
    let mut gp = String::new();
    gp.push_str("set terminal pngcairo size 840,560\n");
    gp.push_str(&format!("set output '{}.png'\n", basename));
    gp.push_str("set multiplot layout 2,1\n");
    for (panel, col, title) in [(1, 2, "FAC"), (2, 3, "FACP")] {
        let _ = panel;
        gp.push_str(&format!(
            "set title '{} de {} (banda +-{:.4})'\n",
            title, c.series, band
        ));
        gp.push_str("set yrange [-1:1]\nset xlabel 'retardo'\n");
        gp.push_str(&format!(
            "plot '{}.dat' using 1:{} with impulses notitle, {:.6} with lines lt 0 notitle, {:.6} with lines lt 0 notitle\n",
            basename, col, band, -band
        ));
    }
    gp.push_str("unset multiplot\n");
    (dat, gp)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dat_rows_match_observations_and_na_is_question_mark() {
        let a = [Some(1.0), None, Some(3.0)];
        let b = [Some(0.5), Some(0.6), None];
        let (dat, gp) = line_plot("p1", &["a", "b"], &[&a, &b], 1980, true, true);
        let lines: Vec<&str> = dat.lines().collect();
        assert_eq!(lines.len(), 3);
        assert!(lines[1].starts_with('?'));
        assert!(lines[2].ends_with('?'));
        assert!(gp.contains("p1.dat"));
        assert!(gp.contains("with lines"));
    }

    #[test]
    fn correlogram_plot_has_one_row_per_lag() {
        let mut rng = crate::simulate::Rng::new(64);
        let xs = crate::simulate::normal_series(&mut rng, 100);
        let c = crate::diagnostics::correlogram("e", &xs, 50).unwrap();
        let (dat, gp) = correlogram_plot("c1", &c);
        assert_eq!(dat.lines().count(), 50);
        assert!(gp.contains("FACP"));
    }
}
