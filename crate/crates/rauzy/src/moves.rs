use crate::{GeneralizedPermutation, RauzyError, Row};

/// Rauzy move: the side of the interval being induced and the winning row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MoveKind {
    TopRight,
    BottomRight,
    TopLeft,
    BottomLeft,
}

impl MoveKind {
    pub const ALL: [MoveKind; 4] = [
        MoveKind::TopRight,
        MoveKind::BottomRight,
        MoveKind::TopLeft,
        MoveKind::BottomLeft,
    ];

    pub fn is_right(self) -> bool {
        matches!(self, MoveKind::TopRight | MoveKind::BottomRight)
    }

    pub fn winner(self) -> Row {
        match self {
            MoveKind::TopRight | MoveKind::TopLeft => Row::Top,
            MoveKind::BottomRight | MoveKind::BottomLeft => Row::Bottom,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            MoveKind::TopRight => "top-right",
            MoveKind::BottomRight => "bottom-right",
            MoveKind::TopLeft => "top-left",
            MoveKind::BottomLeft => "bottom-left",
        }
    }
}

fn other(row: Row) -> Row {
    match row {
        Row::Top => Row::Bottom,
        Row::Bottom => Row::Top,
    }
}

fn row_mut<'a>(
    top: &'a mut Vec<usize>,
    bottom: &'a mut Vec<usize>,
    row: Row,
) -> &'a mut Vec<usize> {
    match row {
        Row::Top => top,
        Row::Bottom => bottom,
    }
}

/// Position of the occurrence of `symbol` other than `(row, index)`.
fn partner(p: &GeneralizedPermutation, symbol: usize, row: Row, index: usize) -> (Row, usize) {
    let [a, b] = p.occurrences()[symbol];
    if a == (row, index) {
        b
    } else {
        a
    }
}

fn finish(top: Vec<usize>, bottom: Vec<usize>) -> Result<GeneralizedPermutation, RauzyError> {
    let q = GeneralizedPermutation::raw(top, bottom);
    if q.top().is_empty() || q.bottom().is_empty() || !q.is_realizable() {
        return Err(RauzyError::MoveUndefined);
    }
    Ok(q.canonical())
}

/// Right induction: the last symbol of the losing row is moved next to the
/// second occurrence of the winning row's last symbol, after it when that
/// occurrence lies in the losing row and before it otherwise.
fn right_move(
    p: &GeneralizedPermutation,
    winner: Row,
) -> Result<GeneralizedPermutation, RauzyError> {
    let loser = other(winner);
    let w_last = p.row(winner).len() - 1;
    let alpha = p.row(winner)[w_last];
    let beta = *p.row(loser).last().expect("rows are nonempty");
    if alpha == beta {
        return Err(RauzyError::MoveUndefined);
    }
    let (row_a, i) = partner(p, alpha, winner, w_last);
    let mut top = p.top().to_vec();
    let mut bottom = p.bottom().to_vec();
    row_mut(&mut top, &mut bottom, loser).pop();
    if row_a == loser {
        row_mut(&mut top, &mut bottom, loser).insert(i + 1, beta);
    } else {
        row_mut(&mut top, &mut bottom, winner).insert(i, beta);
    }
    finish(top, bottom)
}

/// Inverse of [`right_move`] on its image.
fn right_undo(
    q: &GeneralizedPermutation,
    winner: Row,
) -> Result<GeneralizedPermutation, RauzyError> {
    let loser = other(winner);
    let w_last = q.row(winner).len() - 1;
    let alpha = q.row(winner)[w_last];
    let (row_a, i) = partner(q, alpha, winner, w_last);
    let mut top = q.top().to_vec();
    let mut bottom = q.bottom().to_vec();
    let beta = if row_a == loser {
        if i + 1 >= q.row(loser).len() {
            return Err(RauzyError::MoveUndefined);
        }
        row_mut(&mut top, &mut bottom, loser).remove(i + 1)
    } else {
        if i == 0 {
            return Err(RauzyError::MoveUndefined);
        }
        row_mut(&mut top, &mut bottom, winner).remove(i - 1)
    };
    row_mut(&mut top, &mut bottom, loser).push(beta);
    finish(top, bottom)
}

/// Applies a Rauzy move and renumbers the result canonically.
///
/// Left moves are right moves of the permutation read backwards.
pub fn rauzy_move(
    p: &GeneralizedPermutation,
    kind: MoveKind,
) -> Result<GeneralizedPermutation, RauzyError> {
    if kind.is_right() {
        right_move(p, kind.winner())
    } else {
        Ok(right_move(&p.reversed(), kind.winner())?
            .reversed()
            .canonical())
    }
}

/// Backward Rauzy move: `undo_move(&rauzy_move(p, k)?, k)` is the canonical
/// form of `p`.
pub fn undo_move(
    q: &GeneralizedPermutation,
    kind: MoveKind,
) -> Result<GeneralizedPermutation, RauzyError> {
    if kind.is_right() {
        right_undo(q, kind.winner())
    } else {
        Ok(right_undo(&q.reversed(), kind.winner())?
            .reversed()
            .canonical())
    }
}
