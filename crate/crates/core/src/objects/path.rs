use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::{join_ints, parse_int_list, Invariant, ParseError, ValidationError, Violation};

/// A unit step: `U = (1,1)`, `D = (1,-1)`, `W = (-1,1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    D,
    U,
    W,
}

impl Step {
    pub fn delta(self) -> (i64, i64) {
        match self {
            Step::U => (1, 1),
            Step::D => (1, -1),
            Step::W => (-1, 1),
        }
    }

    pub fn letter(self) -> char {
        match self {
            Step::U => 'U',
            Step::D => 'D',
            Step::W => 'W',
        }
    }

    pub fn from_letter(c: char) -> Option<Step> {
        match c {
            'U' => Some(Step::U),
            'D' => Some(Step::D),
            'W' => Some(Step::W),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PathKind {
    Dyck,
    ValleyMarkedDyck,
    Steady,
    ValleyMarkedSteady,
}

impl PathKind {
    pub fn allows_w(self) -> bool {
        matches!(self, PathKind::Steady | PathKind::ValleyMarkedSteady)
    }

    pub fn is_marked(self) -> bool {
        matches!(self, PathKind::ValleyMarkedDyck | PathKind::ValleyMarkedSteady)
    }
}

/// A `DU` factor. `up_index` is the index of its `U` step; the valley vertex
/// is the start point of that step.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Valley {
    pub up_index: usize,
    pub x: i64,
    pub height: i64,
}

/// A lattice path over `{U, D, W}` with one mark height per valley.
///
/// Marks are listed left to right and stored apart from the step word, so the
/// four kinds share one representation (unmarked kinds carry zero marks).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    steps: Vec<Step>,
    marks: Vec<u32>,
    kind: PathKind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct PathStatistics {
    pub w_count: usize,
    pub total_mark: u64,
    /// Interior points on the x-axis.
    pub returns_to_axis: usize,
    /// Valleys whose mark sits on the valley itself.
    pub returns_to_mark: usize,
    /// Steps whose segment lies on the line `y = x`.
    pub diagonal_steps: usize,
    pub last_descent_length: usize,
    /// `t` of the edge line `y = x - t`.
    pub edge_line_offset: i64,
}

impl Path {
    pub fn new(steps: Vec<Step>, marks: Vec<u32>, kind: PathKind) -> Result<Self, ValidationError> {
        let p = Path { steps, marks, kind };
        p.validate()?;
        Ok(p)
    }

    pub fn new_unchecked(steps: Vec<Step>, marks: Vec<u32>, kind: PathKind) -> Self {
        Path { steps, marks, kind }
    }

    /// A path with every valley trivially marked.
    pub fn unmarked(steps: Vec<Step>, kind: PathKind) -> Self {
        let mut p = Path {
            steps,
            marks: Vec::new(),
            kind,
        };
        p.marks = vec![0; p.valleys().len()];
        p
    }

    /// Builds a trivially marked path from a `U`/`D`/`W` word and validates it.
    pub fn from_word(word: &str, kind: PathKind) -> Result<Self, super::ObjectError> {
        let p = Path::parse(word, kind)?;
        p.validate()?;
        Ok(p)
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn marks(&self) -> &[u32] {
        &self.marks
    }

    pub fn kind(&self) -> PathKind {
        self.kind
    }

    /// The same steps and marks read as another kind.
    pub fn with_kind(&self, kind: PathKind) -> Path {
        Path {
            steps: self.steps.clone(),
            marks: self.marks.clone(),
            kind,
        }
    }

    /// The same steps with new marks.
    pub fn with_marks(&self, marks: Vec<u32>) -> Path {
        Path {
            steps: self.steps.clone(),
            marks,
            kind: self.kind,
        }
    }

    /// Number of `U` steps.
    pub fn size(&self) -> usize {
        self.steps.iter().filter(|&&s| s == Step::U).count()
    }

    pub fn w_count(&self) -> usize {
        self.steps.iter().filter(|&&s| s == Step::W).count()
    }

    pub fn total_mark(&self) -> u64 {
        self.marks.iter().map(|&m| m as u64).sum()
    }

    /// Lattice points visited, starting at the origin; `points()[i]` is the
    /// start of step `i`.
    pub fn points(&self) -> Vec<(i64, i64)> {
        let mut pts = Vec::with_capacity(self.steps.len() + 1);
        let (mut x, mut y) = (0i64, 0i64);
        pts.push((x, y));
        for s in &self.steps {
            let (dx, dy) = s.delta();
            x += dx;
            y += dy;
            pts.push((x, y));
        }
        pts
    }

    pub fn valleys(&self) -> Vec<Valley> {
        let pts = self.points();
        self.steps
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] == Step::D && w[1] == Step::U)
            .map(|(i, _)| Valley {
                up_index: i + 1,
                x: pts[i + 1].0,
                height: pts[i + 1].1,
            })
            .collect()
    }

    pub fn last_descent_length(&self) -> usize {
        self.steps.iter().rev().take_while(|&&s| s == Step::D).count()
    }

    /// `t` of the edge line `y = x - t` through the up step of the rightmost
    /// `UU` or `WU` factor; `0` when neither factor occurs.
    pub fn edge_line_offset(&self) -> i64 {
        let pts = self.points();
        (1..self.steps.len())
            .rev()
            .find(|&i| self.steps[i] == Step::U && matches!(self.steps[i - 1], Step::U | Step::W))
            .map(|i| pts[i].0 - pts[i].1)
            .unwrap_or(0)
    }

    pub fn statistics(&self) -> PathStatistics {
        let pts = self.points();
        let valleys = self.valleys();
        let returns_to_axis = if pts.len() > 2 {
            pts[1..pts.len() - 1].iter().filter(|p| p.1 == 0).count()
        } else {
            0
        };
        let returns_to_mark = valleys
            .iter()
            .zip(&self.marks)
            .filter(|(v, &m)| v.height == m as i64)
            .count();
        let diagonal_steps = self
            .steps
            .iter()
            .enumerate()
            .filter(|&(i, &s)| s == Step::U && pts[i].0 == pts[i].1)
            .count();
        PathStatistics {
            w_count: self.w_count(),
            total_mark: self.total_mark(),
            returns_to_axis,
            returns_to_mark,
            diagonal_steps,
            last_descent_length: self.last_descent_length(),
            edge_line_offset: self.edge_line_offset(),
        }
    }

    /// Checks every invariant of the path's kind and reports all violations.
    pub fn validate(&self) -> Result<(), ValidationError> {
        let mut out = Vec::new();
        let pts = self.points();
        let n = self.size() as i64;
        if n == 0 {
            out.push(Violation::new(Invariant::Empty, 0));
        }

        let steady = self.kind.allows_w();
        for (i, s) in self.steps.iter().enumerate() {
            let (x, y) = pts[i + 1];
            if !steady && *s == Step::W {
                out.push(Violation::new(Invariant::WStep, i));
            }
            if y < 0 {
                out.push(Violation::new(Invariant::BelowAxis, i));
            } else if steady && (y > x || x < 0) {
                out.push(Violation::new(Invariant::OutsideCone, i));
            }
        }
        let end = *pts.last().unwrap();
        if end != (2 * n, 0) {
            out.push(Violation::new(Invariant::WrongEnd, self.steps.len()));
        }

        if steady {
            for i in 0..self.steps.len().saturating_sub(1) {
                let pair = (self.steps[i], self.steps[i + 1]);
                let invariant = match pair {
                    (Step::W, Step::D) | (Step::D, Step::W) => {
                        out.push(Violation::new(Invariant::ForbiddenFactor, i));
                        continue;
                    }
                    (Step::U, Step::U) => Invariant::S1,
                    (Step::W, Step::U) => Invariant::S2,
                    _ => continue,
                };
                // the line through the up step: y = x - c
                let (ux, uy) = pts[i + 1];
                let c = ux - uy;
                if pts[i + 2..].iter().any(|&(x, y)| x - y < c) {
                    out.push(Violation::new(invariant, i));
                }
            }
        }

        self.validate_marks(&pts, &mut out);
        ValidationError::check(out)
    }

    fn validate_marks(&self, pts: &[(i64, i64)], out: &mut Vec<Violation>) {
        let valleys = self.valleys();
        if valleys.len() != self.marks.len() {
            out.push(Violation::new(Invariant::MarkCount, self.marks.len()));
            return;
        }
        if !self.kind.is_marked() {
            for (v, &m) in valleys.iter().zip(&self.marks) {
                if m != 0 {
                    out.push(Violation::new(Invariant::NonzeroMark, v.up_index));
                }
            }
            return;
        }
        for (v, &m) in valleys.iter().zip(&self.marks) {
            if m as i64 > v.height {
                out.push(Violation::new(Invariant::M1, v.up_index));
            }
        }
        if self.kind != PathKind::ValleyMarkedSteady {
            return;
        }
        for (v, &m) in valleys.iter().zip(&self.marks) {
            if m == 0 {
                continue;
            }
            let mut m2 = false;
            let mut m3 = false;
            for (i, s) in self.steps.iter().enumerate() {
                if *s != Step::W {
                    continue;
                }
                let w_bottom = pts[i].1;
                if v.height > w_bottom {
                    m2 = true;
                } else if v.height == w_bottom && v.up_index < i {
                    m3 = true;
                }
            }
            if m2 {
                out.push(Violation::new(Invariant::M2, v.up_index));
            }
            if m3 {
                out.push(Violation::new(Invariant::M3, v.up_index));
            }
        }
    }

    /// Parses `WORD[;marks=m1,m2,...]`. Without the suffix every valley gets
    /// a trivial mark.
    pub fn parse(text: &str, kind: PathKind) -> Result<Self, ParseError> {
        let (word, marks_text) = match text.find(';') {
            Some(i) => (&text[..i], Some((i + 1, &text[i + 1..]))),
            None => (text, None),
        };
        let mut steps = Vec::with_capacity(word.len());
        for (i, c) in word.char_indices() {
            match Step::from_letter(c) {
                Some(s) => steps.push(s),
                None => {
                    return Err(ParseError::new(
                        i,
                        alloc::format!("unexpected step letter {:?}", c),
                    ))
                }
            }
        }
        let mut path = Path::unmarked(steps, kind);
        if let Some((offset, suffix)) = marks_text {
            let list = suffix
                .strip_prefix("marks=")
                .ok_or_else(|| ParseError::new(offset, "expected \"marks=\""))?;
            let marks = if list.is_empty() {
                Vec::new()
            } else {
                parse_int_list(list).map_err(|e| ParseError::new(offset + 6 + e.position, e.message))?
            };
            if marks.len() != path.marks.len() {
                return Err(ParseError::new(
                    offset,
                    alloc::format!(
                        "{} marks given for {} valleys",
                        marks.len(),
                        path.marks.len()
                    ),
                ));
            }
            path.marks = marks;
        }
        Ok(path)
    }

    pub fn word(&self) -> String {
        self.steps.iter().map(|s| s.letter()).collect()
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.word())?;
        if self.marks.iter().any(|&m| m != 0) {
            write!(f, ";marks={}", join_ints(&self.marks))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn steady(word: &str) -> Path {
        Path::parse(word, PathKind::Steady).unwrap()
    }

    #[test]
    fn smallest_steady_path() {
        assert!(steady("UD").validate().is_ok());
    }

    #[test]
    fn steady_example_with_w() {
        let p = steady("UUDUWUDDDD");
        assert_eq!(p.validate(), Ok(()));
        assert_eq!(p.statistics().w_count, 1);
    }

    #[test]
    fn s1_violation_detected() {
        let err = steady("UUDDUUUWUDDDDD").validate().unwrap_err();
        // the UU factor from (4,0) to (6,2) starts at step 4
        assert!(err.violations.contains(&Violation::new(Invariant::S1, 4)));
        let p = steady("UUDDUUUWUDDDDD");
        let pts = p.points();
        assert_eq!(pts[6], (6, 2));
        assert_eq!(pts[8], (6, 4));
    }

    #[test]
    fn forbidden_factors_and_cone() {
        assert!(steady("UDWU").validate().unwrap_err().contains(Invariant::ForbiddenFactor));
        assert!(steady("WU").validate().unwrap_err().contains(Invariant::OutsideCone));
        assert!(steady("DU").validate().unwrap_err().contains(Invariant::BelowAxis));
    }

    #[test]
    fn dyck_rejects_w() {
        let p = Path::parse("UUDUWUDDDD", PathKind::Dyck).unwrap();
        assert!(p.validate().unwrap_err().contains(Invariant::WStep));
    }

    #[test]
    fn statistics_of_ud() {
        let s = steady("UD").statistics();
        assert_eq!(s.w_count, 0);
        assert_eq!(s.last_descent_length, 1);
        assert_eq!(s.edge_line_offset, 0);
        assert_eq!(s.diagonal_steps, 1);
    }

    #[test]
    fn marked_dyck_statistics() {
        let p = Path::parse("UUUDUDDD;marks=1", PathKind::ValleyMarkedDyck).unwrap();
        assert_eq!(p.validate(), Ok(()));
        assert_eq!(p.valleys()[0].height, 2);
        let s = p.statistics();
        assert_eq!(s.total_mark, 1);
        assert_eq!(s.returns_to_mark, 0);
        assert_eq!(s.returns_to_axis, 0);
    }

    #[test]
    fn returns_count_interior_axis_points() {
        let p = Path::parse("UDUDUD", PathKind::Dyck).unwrap();
        let s = p.statistics();
        assert_eq!(s.returns_to_axis, 2);
        assert_eq!(s.returns_to_mark, 2);
    }

    #[test]
    fn mark_conditions() {
        let p = Path::parse("UUDUDD;marks=2", PathKind::ValleyMarkedDyck).unwrap();
        assert!(p.validate().unwrap_err().contains(Invariant::M1));
        // valley at height 1 marked 1, W step from height 2: fine
        let ok = Path::parse("UUDUWUDDDD;marks=1", PathKind::ValleyMarkedSteady).unwrap();
        assert_eq!(ok.validate(), Ok(()));
        // valley at height 1 level with a W step starting at height 1 to its right
        let bad = Path::parse("UUDUDDUWUDDD;marks=1,0", PathKind::ValleyMarkedSteady).unwrap();
        let err = bad.validate().unwrap_err();
        assert!(err.contains(Invariant::M3), "{:?}", err);
    }

    #[test]
    fn edge_line() {
        assert_eq!(steady("UDUD").edge_line_offset(), 0);
        // UU from (2,0): line y = x - 2
        assert_eq!(steady("UDUUDD").edge_line_offset(), 2);
    }

    #[test]
    fn parse_errors() {
        let e = Path::parse("UUXD", PathKind::Dyck).unwrap_err();
        assert_eq!(e.position, 2);
        assert!(Path::parse("UDUD;marks=0,0", PathKind::ValleyMarkedDyck).is_err());
        assert!(Path::parse("UDUD;mark=0", PathKind::ValleyMarkedDyck).is_err());
    }

    #[test]
    fn text_round_trip() {
        let p = Path::parse("UUUDUDDD;marks=1", PathKind::ValleyMarkedDyck).unwrap();
        assert_eq!(p.to_string(), "UUUDUDDD;marks=1");
        assert_eq!(Path::parse("UUDD", PathKind::Dyck).unwrap().steps().len(), 4);
        assert_eq!(steady("UDUD").to_string(), "UDUD");
    }
}
