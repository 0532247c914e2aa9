use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use super::{Invariant, ObjectError, ParseError, ValidationError, Violation};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Node {
    pub label: u32,
    pub children: Vec<Node>,
}

impl Node {
    pub fn leaf(label: u32) -> Node {
        Node {
            label,
            children: Vec::new(),
        }
    }

    fn count(&self) -> usize {
        1 + self.children.iter().map(Node::count).sum::<usize>()
    }

    fn collect_leaves(&self, out: &mut Vec<u32>) {
        if self.children.is_empty() {
            out.push(self.label);
        }
        for c in &self.children {
            c.collect_leaves(out);
        }
    }

    fn collect_labels(&self, out: &mut Vec<u32>) {
        out.push(self.label);
        for c in &self.children {
            c.collect_labels(out);
        }
    }

    pub(crate) fn map_labels(&self, f: &impl Fn(u32) -> u32) -> Node {
        Node {
            label: f(self.label),
            children: self.children.iter().map(|c| c.map_labels(f)).collect(),
        }
    }
}

/// A plane tree on the labels `{0, ..., n}`, rooted at `0`, where every
/// child exceeds its parent.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IncreasingOrderedTree {
    root: Node,
}

impl IncreasingOrderedTree {
    pub fn new(root: Node) -> Result<Self, ValidationError> {
        let t = IncreasingOrderedTree { root };
        t.validate()?;
        Ok(t)
    }

    pub fn new_unchecked(root: Node) -> Self {
        IncreasingOrderedTree { root }
    }

    /// The tree of size 1: `0(1)`.
    pub fn single_edge() -> Self {
        IncreasingOrderedTree {
            root: Node {
                label: 0,
                children: vec![Node::leaf(1)],
            },
        }
    }

    pub fn root(&self) -> &Node {
        &self.root
    }

    /// Number of non-root vertices.
    pub fn size(&self) -> usize {
        self.root.count() - 1
    }

    pub fn root_degree(&self) -> usize {
        self.root.children.len()
    }

    /// Leaf labels in pre-order.
    pub fn leaves(&self) -> Vec<u32> {
        let mut out = Vec::new();
        self.root.collect_leaves(&mut out);
        out
    }

    pub fn has_increasing_leaves(&self) -> bool {
        self.leaves().windows(2).all(|w| w[0] < w[1])
    }

    pub fn validate(&self) -> Result<(), ValidationError> {
        let mut out = Vec::new();
        let mut labels = Vec::new();
        self.root.collect_labels(&mut labels);
        let n = labels.len() - 1;
        if n == 0 {
            out.push(Violation::new(Invariant::Empty, 0));
        }
        let mut seen = vec![false; n + 1];
        for &l in &labels {
            if l as usize > n || seen[l as usize] {
                out.push(Violation::new(Invariant::TreeLabels, l as usize));
            } else {
                seen[l as usize] = true;
            }
        }
        if self.root.label != 0 {
            out.push(Violation::new(Invariant::TreeLabels, self.root.label as usize));
        }
        fn walk(node: &Node, out: &mut Vec<Violation>) {
            for c in &node.children {
                if c.label <= node.label {
                    out.push(Violation::new(Invariant::TreeNotIncreasing, c.label as usize));
                }
                walk(c, out);
            }
        }
        walk(&self.root, &mut out);
        ValidationError::check(out)
    }

    /// Parses the nested format, e.g. `0(1(3)2)` or `0(1,2)`. Siblings may be
    /// separated by `,` or spaces, which is required when a leaf is followed
    /// by another sibling.
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut p = TreeParser {
            bytes: text.as_bytes(),
            pos: 0,
        };
        let root = p.node()?;
        p.skip_ws();
        if p.pos != p.bytes.len() {
            return Err(ParseError::new(p.pos, "trailing input"));
        }
        Ok(IncreasingOrderedTree { root })
    }
}

struct TreeParser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl TreeParser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn node(&mut self) -> Result<Node, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(ParseError::new(start, "expected a vertex label"));
        }
        let label = core::str::from_utf8(&self.bytes[start..self.pos])
            .ok()
            .and_then(|s| s.parse::<u32>().ok())
            .ok_or_else(|| ParseError::new(start, "label out of range"))?;
        let mut children = Vec::new();
        self.skip_ws();
        if self.pos < self.bytes.len() && self.bytes[self.pos] == b'(' {
            self.pos += 1;
            loop {
                self.skip_ws();
                match self.bytes.get(self.pos) {
                    Some(b')') => {
                        self.pos += 1;
                        break;
                    }
                    Some(b',') if !children.is_empty() => self.pos += 1,
                    None => return Err(ParseError::new(self.pos, "unclosed '('")),
                    _ => {}
                }
                children.push(self.node()?);
            }
            if children.is_empty() {
                return Err(ParseError::new(self.pos - 1, "empty child list"));
            }
        }
        Ok(Node { label, children })
    }
}

fn write_node(node: &Node, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    write!(f, "{}", node.label)?;
    if node.children.is_empty() {
        return Ok(());
    }
    f.write_str("(")?;
    for (i, c) in node.children.iter().enumerate() {
        if i > 0 && node.children[i - 1].children.is_empty() {
            f.write_str(",")?;
        }
        write_node(c, f)?;
    }
    f.write_str(")")
}

impl fmt::Display for IncreasingOrderedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_node(&self.root, f)
    }
}

impl FromStr for IncreasingOrderedTree {
    type Err = ObjectError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = IncreasingOrderedTree::parse(s)?;
        t.validate()?;
        Ok(t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn parses_nested_example() {
        let t: IncreasingOrderedTree = "0(1(3)2)".parse().unwrap();
        assert_eq!(t.size(), 3);
        assert_eq!(t.root_degree(), 2);
        assert_eq!(t.leaves(), vec![3, 2]);
        assert!(!t.has_increasing_leaves());
        assert_eq!(t.to_string(), "0(1(3)2)");
    }

    #[test]
    fn leaf_siblings_need_separator() {
        let t: IncreasingOrderedTree = "0(1 2)".parse().unwrap();
        assert_eq!(t.to_string(), "0(1,2)");
        assert!(t.has_increasing_leaves());
    }

    #[test]
    fn rejects_bad_labels() {
        let err = "0(2(1))".parse::<IncreasingOrderedTree>().unwrap_err();
        assert!(matches!(err, ObjectError::Invalid(e) if e.contains(Invariant::TreeNotIncreasing)));
        let err = "0(1,3)".parse::<IncreasingOrderedTree>().unwrap_err();
        assert!(matches!(err, ObjectError::Invalid(e) if e.contains(Invariant::TreeLabels)));
        assert!(IncreasingOrderedTree::parse("0(1").is_err());
        assert!(IncreasingOrderedTree::parse("0()").is_err());
    }
}
