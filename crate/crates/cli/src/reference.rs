//! Published exact volumes and one-cylinder coefficients of the quadratic
//! strata of dimensions 4 to 6, used only for comparison columns.

/// One stratum row. Strata with two components carry the per-component
/// values in `components` and their sums in `r` and `volume`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReferenceRow {
    pub key: &'static str,
    pub dim: usize,
    pub stratum: &'static str,
    /// Coefficient of `ζ(dim)` in the total one-cylinder contribution.
    pub r: &'static str,
    /// Exact volume in the text form of `SymbolicValue`.
    pub volume: &'static str,
    pub components: Option<&'static str>,
}

const fn row(
    key: &'static str,
    dim: usize,
    stratum: &'static str,
    r: &'static str,
    volume: &'static str,
) -> ReferenceRow {
    ReferenceRow {
        key,
        dim,
        stratum,
        r,
        volume,
        components: None,
    }
}

const fn split(
    key: &'static str,
    dim: usize,
    stratum: &'static str,
    r: &'static str,
    volume: &'static str,
    components: &'static str,
) -> ReferenceRow {
    ReferenceRow {
        key,
        dim,
        stratum,
        r,
        volume,
        components: Some(components),
    }
}

pub const REFERENCE: &[ReferenceRow] = &[
    row("vol-d4-01", 4, "Q(1,-1^5)", "40", "1 * pi^4"),
    row("vol-d4-02", 4, "Q(1^2,-1^2)", "50/3", "1/3 * pi^4"),
    row("vol-d4-03", 4, "Q(3,-1^3)", "30", "5/9 * pi^4"),
    row("vol-d4-04", 4, "Q(2^2)", "17/4", "2/3 * pi^2"),
    row("vol-d4-05", 4, "Q(5,-1)", "12", "28/135 * pi^4"),
    row("vol-d5-01", 5, "Q(2,-1^6)", "60", "8/3 * pi^4"),
    row("vol-d5-02", 5, "Q(2,1,-1^3)", "45", "1 * pi^4"),
    row("vol-d5-03", 5, "Q(4,-1^4)", "84", "2 * pi^4"),
    row("vol-d5-04", 5, "Q(2,1^2)", "11/2", "2/15 * pi^4"),
    row("vol-d5-05", 5, "Q(4,1,-1)", "68/3", "8/15 * pi^4"),
    row("vol-d5-06", 5, "Q(3,2,-1)", "115/6", "10/27 * pi^4"),
    split(
        "vol-d5-07",
        5,
        "Q(6,-1^2)",
        "263/4",
        "184/135 * pi^4",
        "hyp: r=65/12, vol=8/45 * pi^4; non-hyp: r=181/3, vol=32/27 * pi^4",
    ),
    row("vol-d5-08", 5, "Q(8)", "56/3", "10/27 * pi^4"),
    row("vol-d6-01", 6, "Q(1^2,-1^6)", "140", "1/2 * pi^6"),
    row("vol-d6-02", 6, "Q(3,-1^7)", "84", "3/4 * pi^6"),
    row("vol-d6-03", 6, "Q(1^3,-1^3)", "77", "11/60 * pi^6"),
    row("vol-d6-04", 6, "Q(3,1,-1^4)", "126", "1/3 * pi^6"),
    row("vol-d6-05", 6, "Q(2^2,-1^4)", "110", "136/45 * pi^4"),
    row("vol-d6-06", 6, "Q(5,-1^5)", "210", "7/10 * pi^6"),
    row("vol-d6-07", 6, "Q(1^4)", "49/3", "1/15 * pi^6"),
    row("vol-d6-08", 6, "Q(3,1^2,-1)", "119/3", "1/9 * pi^6"),
    row("vol-d6-09", 6, "Q(2^2,1,-1)", "94/3", "4/5 * pi^4"),
    row("vol-d6-10", 6, "Q(5,1,-1^2)", "189/2", "7/30 * pi^6"),
    row("vol-d6-11", 6, "Q(4,2,-1^2)", "317/4", "28/15 * pi^4"),
    split(
        "vol-d6-12",
        6,
        "Q(3^2,-1^2)",
        "791/10",
        "53/270 * pi^6",
        "hyp: r=161/30, vol=1/30 * pi^6; non-hyp: r=1106/15, vol=22/135 * pi^6",
    ),
    row("vol-d6-13", 6, "Q(7,-1^3)", "441/2", "27/50 * pi^6"),
    row("vol-d6-14", 6, "Q(7,1)", "37", "18/175 * pi^6"),
    split(
        "vol-d6-15",
        6,
        "Q(6,2)",
        "1621/48",
        "104/135 * pi^4",
        "hyp: r=65/48, vol=8/135 * pi^4; non-hyp: r=389/12, vol=96/135 * pi^4",
    ),
    row("vol-d6-16", 6, "Q(5,3)", "77/3", "14/243 * pi^6"),
    row("vol-d6-17", 6, "Q(4^2)", "92/3", "4/5 * pi^4"),
    split(
        "vol-d6-18",
        6,
        "Q(9,-1)",
        "440/3",
        "15224/42525 * pi^6",
        "regular: r=385/3; irregular: r=55/3; volume of the whole stratum",
    ),
];

pub fn rows_of_dimension(dim: usize) -> impl Iterator<Item = &'static ReferenceRow> {
    REFERENCE.iter().filter(move |r| r.dim == dim)
}

pub fn lookup(stratum: &str) -> Option<&'static ReferenceRow> {
    REFERENCE.iter().find(|r| r.stratum == stratum)
}
