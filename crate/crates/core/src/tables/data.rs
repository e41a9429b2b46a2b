//! Verbatim closed-form tables. Each [`Branch`] is one displayed case:
//! a family pattern such as `a,b,c|c`, a guard on `(a, b, c)` and the sum as
//! printed.

use super::formula::Params;

#[derive(Debug, Clone, Copy)]
pub struct Branch {
    /// `<family label>:<case number>`, e.g. `P_{a,b,c|c}:1.2.1`.
    pub id: &'static str,
    /// Pattern of the head weight in the symbols `a`, `b`, `c`.
    pub family: &'static str,
    guard: fn(i64, i64, i64) -> bool,
    /// The sum exactly as displayed, with line breaks removed.
    pub formula: &'static str,
}

const fn br(
    id: &'static str,
    family: &'static str,
    guard: fn(i64, i64, i64) -> bool,
    formula: &'static str,
) -> Branch {
    Branch {
        id,
        family,
        guard,
        formula,
    }
}

impl Branch {
    pub fn applies(&self, p: &Params) -> bool {
        p.a >= p.b && (self.guard)(p.a, p.b, p.c)
    }
}

pub(super) fn gl31() -> &'static [Branch] {
    GL31
}

pub(super) fn gl22() -> &'static [Branch] {
    GL22
}

pub(super) fn composition() -> &'static [Branch] {
    COMPOSITION
}

static GL31: &[Branch] = &[
    br(
        "P_{a,b,c|c}:1.1",
        "a,b,c|c",
        |_a, b, c| b > c + 1,
        "M_{a,b,c|c} + M_{a,b,c+1|c+1}",
    ),
    br(
        "P_{a,b,c|c}:1.2.1",
        "a,b,c|c",
        |a, b, c| b == c + 1 && a > c + 2,
        "M_{a,c+1,c|c} + M_{a,c+1,c+1|c+1} + M_{a,c+2,c+1|c+2}",
    ),
    br(
        "P_{a,b,c|c}:1.2.2",
        "a,b,c|c",
        |a, b, c| b == c + 1 && a == c + 2,
        "M_{c+2,c+1,c|c} + M_{c+2,c+2,c+1|c+2} + M_{c+2,c+1,c+1|c+1} + M_{c+3,c+2,c+1|c+3}",
    ),
    br(
        "P_{a,b,c|c}:1.2.3",
        "a,b,c|c",
        |a, b, c| b == c + 1 && a == c + 1,
        "M_{c+1,c+1,c|c} + M_{c+1,c+1,c+1|c+1} + M_{c+1,c+2,c+1|c+2} + M_{c+2,c+1,c+1|c+2}",
    ),
    br(
        "P_{a,b,c|c}:2.1",
        "a,b,c|c",
        |a, b, c| b == c && a > c + 1,
        "M_{a,c,c|c} + M_{a,c,c+1|c+1} + M_{a,c+1,c|c+1}",
    ),
    br(
        "P_{a,b,c|c}:2.2",
        "a,b,c|c",
        |a, b, c| b == c && a == c + 1,
        "M_{c+1,c,c|c} + M_{c+2,c+1,c|c+2} + M_{c+1,c,c+1|c+1} + M_{c+1,c+1,c|c+1} + M_{c+2,c,c+1|c+2}",
    ),
    br(
        "P_{a,b,c|c}:2.3",
        "a,b,c|c",
        |a, b, c| b == c && a == c,
        "M_{c,c,c|c} + M_{c,c,c+1|c+1} + M_{c+1,c,c|c+1} + M_{c+1,c,c|c+1}",
    ),
    br(
        "P_{a,b,c|c}:3.1.1",
        "a,b,c|c",
        |a, b, c| b < c && a > c + 1,
        "M_{a,b,c|c} + M_{a,b,c+1|c+1} + M_{a,c,b|c} + M_{a,c+1,b|c+1}",
    ),
    br(
        "P_{a,b,c|c}:3.1.2",
        "a,b,c|c",
        |a, b, c| b < c && a == c + 1,
        "M_{c+1,b,c|c} + M_{c+1,b,c+1|c+1} + M_{c+2,b,c+1|c+2} + M_{c+1,c,b|c} + M_{c+1,c+1,b|c+1} + M_{c+2,c+1,b|c+2}",
    ),
    br(
        "P_{a,b,c|c}:3.2",
        "a,b,c|c",
        |a, b, c| b < c && a == c,
        "M_{c,b,c|c} + M_{c,b,c+1|c+1} + M_{c+1,b,c|c+1} + M_{c,c,b|c} + M_{c,c+1,b|c+1} + M_{c+1,c,b|c+1}",
    ),
    br(
        "P_{a,b,c|c}:3.3.1",
        "a,b,c|c",
        |a, b, c| a < c && a > b,
        "M_{a,b,c|c} + M_{a,b,c+1|c+1} + M_{a,c,b|c} + M_{c,a,b|c} + M_{a,c+1,b|c+1} + M_{c+1,a,b|c+1} + M_{c,b,a|c} + M_{c+1,b,a|c+1}",
    ),
    br(
        "P_{a,b,c|c}:3.3.2",
        "a,b,c|c",
        |a, b, c| a < c && a == b,
        "M_{b,b,c|c} + M_{b,b,c+1|c+1} + M_{b,c,b|c} + M_{b,c+1,b|c+1} + M_{c,b,b|c} + M_{c+1,b,b|c+1}",
    ),
    br(
        "P_{b,a,c|c}:1.1",
        "b,a,c|c",
        |a, b, c| b > c + 1 && a > b,
        "M_{b,a,c|c} + M_{b,a,c+1|c+1} + M_{a,b,c|c} + M_{a,b,c+1|c+1}",
    ),
    br(
        "P_{b,a,c|c}:1.2.1",
        "b,a,c|c",
        |a, b, c| b == c + 1 && a > c + 2,
        "M_{c+1,a,c|c} + M_{c+2,a,c+1|c+2} + M_{c+1,a,c+1|c+1} + M_{a,c+1,c|c} + M_{a,c+2,c+1|c+2} + M_{a,c+1,c+1|c+1}",
    ),
    br(
        "P_{b,a,c|c}:1.2.2",
        "b,a,c|c",
        |a, b, c| b == c + 1 && a == c + 2,
        "M_{c+1,c+2,c|c} + M_{c+2,c+1,c|c} + M_{c+1,c+2,c+1|c+1} + M_{c+2,c+1,c+1|c+1} + M_{c+2,c+2,c+1|c+2}",
    ),
    br(
        "P_{b,a,c|c}:2.1",
        "b,a,c|c",
        |a, b, c| b == c && a > c + 1,
        "M_{c,a,c|c} + M_{c,a,c+1|c+1} + M_{c+1,a,c|c+1} + M_{a,c,c|c} + M_{a,c,c+1|c+1} + M_{a,c+1,c|c+1}",
    ),
    br(
        "P_{b,a,c|c}:2.2",
        "b,a,c|c",
        |a, b, c| b == c && a == c + 1,
        "M_{c,c+1,c|c} + M_{c,c+2,c+1|c+2} + M_{c+1,c+2,c|c+2} + M_{c,c+1,c+1|c+1} + 2M_{c+1,c+1,c|c+1} + M_{c+2,c,c+1|c+2} + M_{c+2,c+1,c|c+2} + M_{c+1,c,c+1|c+1} + M_{c+1,c,c|c}",
    ),
    br(
        "P_{b,a,c|c}:3.1.1",
        "b,a,c|c",
        |a, b, c| b < c && a > c + 1,
        "M_{b,a,c|c} + M_{a,b,c|c} + M_{a,c,b|c} + M_{c,a,b|c} + M_{b,a,c+1|c+1} + M_{a,b,c+1|c+1} + M_{a,c+1,b|c+1} + M_{c+1,a,b|c+1}",
    ),
    br(
        "P_{b,a,c|c}:3.1.2",
        "b,a,c|c",
        |a, b, c| b < c && a == c + 1,
        "M_{b,c+1,c|c} + M_{b,c+2,c+1|c+2} + M_{b,c+1,c+1|c+1} + M_{c+1,b,c|c} + M_{c+2,b,c+1|c+2} + M_{c+1,b,c+1|c+1} + M_{c,c+1,b|c} + M_{c+1,c+2,b|c+2} + M_{c+1,c+1,b|c+1} + M_{c+1,c,b|c} + M_{c+2,c+1,b|c+2} + M_{c+1,c+1,b|c+1}",
    ),
    br(
        "P_{b,a,c|c}:3.2",
        "b,a,c|c",
        |a, b, c| b < c && a == c,
        "M_{b,c,c|c} + M_{b,c,c+1|c+1} + M_{b,c+1,c|c+1} + M_{c,b,c|c} + M_{c,b,c+1|c+1} + M_{c+1,b,c|c+1} + M_{c,c,b|c} + M_{c,c+1,b|c+1} + M_{c+1,c,b|c+1}",
    ),
    br(
        "P_{b,a,c|c}:3.3",
        "b,a,c|c",
        |a, b, c| a < c && a > b,
        "M_{b,a,c|c} + M_{b,a,c+1|c+1} + M_{b,c,a|c} + M_{b,c+1,a|c+1} + M_{a,b,c|c} + M_{a,b,c+1|c+1} + M_{c,b,a|c} + M_{c+1,b,a|c+1} + M_{a,c,b|c} + M_{a,c+1,b|c+1} + M_{c,a,b|c} + M_{c+1,a,b|c+1}",
    ),
    br(
        "P_{a,c,b|c}:1.1",
        "a,c,b|c",
        |_a, b, c| b > c + 1,
        "M_{a,c,b|c} + M_{a,c+1,b|c+1} + M_{a,b,c|c} + M_{a,b,c+1|c+1}",
    ),
    br(
        "P_{a,c,b|c}:1.2.1",
        "a,c,b|c",
        |a, b, c| b == c + 1 && a > c + 1,
        "M_{a,c,c+1|c} + M_{a,c+1,c+1|c+1} + M_{a,c+1,c|c}",
    ),
    br(
        "P_{a,c,b|c}:1.2.2",
        "a,c,b|c",
        |a, b, c| b == c + 1 && a == c + 1,
        "M_{c+1,c,c+1|c} + M_{c+1,c+1,c+1|c+1} + M_{c+2,c+1,c+1|c+2} + M_{c+1,c+1,c|c}",
    ),
    br(
        "P_{a,c,b|c}:2.1.1",
        "a,c,b|c",
        |a, b, c| b < c && a > c + 1,
        "M_{a,c,b|c} + M_{a,c+1,b|c+1}",
    ),
    br(
        "P_{a,c,b|c}:2.1.2",
        "a,c,b|c",
        |a, b, c| b < c && a == c + 1,
        "M_{c+1,c,b|c} + M_{c+1,c+1,b|c+1} + M_{c+2,c+1,b|c+2}",
    ),
    br(
        "P_{a,c,b|c}:2.2",
        "a,c,b|c",
        |a, b, c| b < c && a == c,
        "M_{c,c,b|c} + M_{c,c+1,b|c+1} + M_{c+1,c,b|c+1}",
    ),
    br(
        "P_{a,c,b|c}:2.3",
        "a,c,b|c",
        |a, _b, c| a < c,
        "M_{a,c,b|c} + M_{a,c+1,b|c+1} + M_{c,a,b|c} + M_{c+1,a,b|c+1}",
    ),
    br(
        "P_{b,c,a|c}:1.1",
        "b,c,a|c",
        |a, b, c| b > c + 1 && a > b,
        "M_{b,c,a|c} + M_{b,a,c|c} + M_{a,b,c|c} + M_{a,c,b|c} + M_{b,c+1,a|c+1} + M_{b,a,c+1|c+1} + M_{a,b,c+1|c+1} + M_{a,c+1,b|c+1}",
    ),
    br(
        "P_{b,c,a|c}:1.2.1",
        "b,c,a|c",
        |a, b, c| b == c + 1 && a > c + 2,
        "M_{c+1,c,a|c} + M_{c+2,c+1,a|c+2} + M_{c+1,c+1,a|c+1} + M_{a,c,c+1|c} + M_{a,c+1,c+2|c+2} + M_{a,c+1,c+1|c+1} + M_{c+1,a,c|c} + M_{c+1,a,c+2|c+2} + M_{c+1,a,c+1|c+1} + M_{a,c+1,c|c} + M_{a,c+2,c+1|c+2} + M_{a,c+1,c+1|c+1}",
    ),
    br(
        "P_{b,c,a|c}:1.2.2",
        "b,c,a|c",
        |a, b, c| b == c + 1 && a == c + 2,
        "M_{c+1,c,c+2|c} + M_{c+2,c,c+1|c} + M_{c+1,c+1,c+2|c+1} + M_{c+2,c+1,c+1|c+1} + M_{c+2,c+1,c+2|c+2} + M_{c+2,c+1,c|c} + M_{c+1,c+2,c|c} + M_{c+1,c+2,c+1|c+1} + M_{c+2,c+1,c+1|c+1} + M_{c+2,c+2,c+1|c+2}",
    ),
    br(
        "P_{b,c,a|c}:2.1",
        "b,c,a|c",
        |a, b, c| b == c && a > c + 1,
        "M_{c,c,a|c} + M_{c+1,c,a|c+1} + M_{c,c+1,a|c+1} + M_{c,a,c|c} + M_{c+1,a,c|c+1} + M_{c,a,c+1|c+1} + M_{a,c,c|c} + M_{a,c+1,c|c+1} + M_{a,c,c+1|c+1}",
    ),
    br(
        "P_{b,c,a|c}:2.2",
        "b,c,a|c",
        |a, b, c| b == c && a == c + 1,
        "M_{c,c,c+1|c} + M_{c+1,c,c|c} + M_{c,c+1,c|c} + M_{c,c+1,c+1|c+1} + M_{c+1,c,c+1|c+1} + M_{c+1,c+1,c|c+1}",
    ),
    br(
        "P_{b,c,a|c}:3.1",
        "b,c,a|c",
        |a, b, c| b < c && a > c + 1,
        "M_{b,c,a|c} + M_{b,c+1,a|c+1} + M_{c,b,a|c} + M_{c+1,b,a|c+1} + M_{a,b,c|c} + M_{a,b,c+1|c+1} + M_{a,c,b|c} + M_{a,c+1,b|c+1} + M_{b,a,c|c} + M_{b,a,c+1|c+1} + M_{c,a,b|c} + M_{c+1,a,b|c+1}",
    ),
    br(
        "P_{b,c,a|c}:3.2.1",
        "b,c,a|c",
        |a, b, c| a == c + 1 && b == c - 1,
        "M_{c-1,c,c+1|c} + M_{c-1,c+1,c|c} + M_{c-1,c+1,c+1|c+1} + M_{c,c-1,c+1|c} + M_{c+1,c-1,c|c} + M_{c+1,c-1,c+1|c+1} + M_{c,c+1,c-1|c} + M_{c+1,c,c-1|c} + M_{c+1,c+1,c-1|c+1}",
    ),
    br(
        "P_{b,c,a|c}:3.2.2",
        "b,c,a|c",
        |a, b, c| a == c + 1 && b < c - 1,
        "M_{b,c,c+1|c} + M_{b,c+1,c|c} + M_{c,b,c+1|c} + M_{c,c+1,b|c} + M_{c+1,b,c|c} + M_{c+1,b,c|c}",
    ),
    br(
        "P_{b,c,a|c}:3.3",
        "b,c,a|c",
        |a, b, c| a < c && a > b,
        "M_{b,c,a|c} + M_{b,c+1,a|c+1} + M_{c,b,a|c} + M_{c+1,b,a|c+1} + M_{a,c,b|c} + M_{a,c+1,b|c+1} + M_{c,a,b|c} + M_{c+1,a,b|c+1}",
    ),
    br(
        "P_{c,a,b|c}:1.1.1",
        "c,a,b|c",
        |a, b, c| b > c + 1 && a > b,
        "M_{c,a,b|c} + M_{c+1,a,b|c+1} + M_{a,c,b|c} + M_{a,c+1,b|c+1} M_{b,a,c|c} + M_{b,a,c+1|c+1} + M_{a,b,c|c} + M_{a,b,c+1|c+1}",
    ),
    br(
        "P_{c,a,b|c}:1.1.2",
        "c,a,b|c",
        |a, b, c| b > c + 1 && a == b,
        "M_{c,b,b|c} + M_{c+1,b,b|c+1} + M_{b,c,b|c} + M_{b,c+1,b|c+1} + M_{b,b,c|c} + M_{b,b,c+1|c+1}",
    ),
    br(
        "P_{c,a,b|c}:1.2.1",
        "c,a,b|c",
        |a, b, c| b == c + 1 && a > c + 1,
        "M_{c,a,c+1|c} + M_{c+1,a,c|c} + M_{c+1,a,c+1|c+1} + M_{a,c,c+1|c} + M_{a,c+1,c|c} + M_{a,c+1,c+1|c+1}",
    ),
    br(
        "P_{c,a,b|c}:1.2.2",
        "c,a,b|c",
        |a, b, c| b == c + 1 && a == c + 1,
        "M_{c,c+1,c+1|c} + M_{c+1,c,c+1|c} + M_{c+1,c+1,c|c} + M_{c+1,c+1,c+1|c+1}",
    ),
    br(
        "P_{c,a,b|c}:2.1.1",
        "c,a,b|c",
        |a, b, c| b < c && a > c + 1,
        "M_{c,a,b|c} + M_{c+1,a,b|c+1} + M_{a,c,b|c} + M_{a,c+1,b|c+1}",
    ),
    br(
        "P_{c,a,b|c}:2.1.2",
        "c,a,b|c",
        |a, b, c| b < c && a == c + 1,
        "M_{c,c+1,b|c} + M_{c+1,c+1,b|c+1}",
    ),
    br(
        "P_{c,a,b|c}:2.2",
        "c,a,b|c",
        |a, _b, c| a < c,
        "M_{c,a,b|c} + M_{c+1,a,b|c+1}",
    ),
    br(
        "P_{c,b,a|c}:1.1",
        "c,b,a|c",
        |a, b, c| b > c + 1 && a > b,
        "M_{c,b,a|c} + M_{c+1,b,a|c+1} + M_{b,c,a|c} M_{b,c+1,a|c+1} + M_{c,a,b|c} + M_{c+1,a,b|c+1} M_{b,a,c|c} + M_{b,a,c+1|c+1} + M_{a,c,b|c} M_{a,c+1,b|c+1} + M_{a,b,c|c} + M_{a,b,c+1|c+1}",
    ),
    br(
        "P_{c,b,a|c}:1.2",
        "c,b,a|c",
        |a, b, c| b == c + 1 && a > c + 1,
        "M_{c,c+1,a|c} + M_{c+1,c,a|c} + M_{c+1,c+1,a|c+1} M_{c,a,c+1|c} + M_{c+1,a,c|c} + M_{c+1,a,c+1|c+1} M_{a,c,c+1|c} + M_{a,c+1,c|c} + M_{a,c+1,c+1|c+1}",
    ),
    br(
        "P_{c,b,a|c}:2.1.1",
        "c,b,a|c",
        |a, b, c| b < c && a > c + 1,
        "M_{c,b,a|c} + M_{c+1,b,a|c+1} + M_{c,a,b|c} + M_{c+1,a,b|c+1} M_{a,b,c|c} + M_{a,b,c+1|c+1} + M_{a,c,b|c} + M_{a,c+1,b|c+1}",
    ),
    br(
        "P_{c,b,a|c}:2.1.2",
        "c,b,a|c",
        |a, b, c| b < c && a == c + 1,
        "M_{c,b,c+1|c} + M_{c,b,c|c} + M_{c+1,b,c+1|c+1} M_{c,c+1,b|c} + M_{c,b,c|c} + M_{c+1,c+1,b|c+1}",
    ),
    br(
        "P_{c,b,a|c}:2.2",
        "c,b,a|c",
        |a, b, c| a < c && a > b,
        "M_{c,b,a|c} + M_{c+1,b,a|c+1} + M_{c,a,b|c} + M_{c+1,a,b,c+1}",
    ),
];

static GL22: &[Branch] = &[
    br(
        "P_{a,b|b,a}:1.1",
        "a,b|b,a",
        |a, b, _c| b < a - 1,
        "M_{a,b|b,a} + M_{a+1,b|b,a+1} + M_{a,b+1|b+1,a} + M_{a+1,b+1|b+1,a+1}",
    ),
    br(
        "P_{a,b|b,a}:1.2",
        "a,b|b,a",
        |a, b, _c| b == a - 1,
        "M_{a,a-1|a-1,a} + M_{a+1,a-1|a-1,a+1} + M_{a,a|a,a} + M_{a,a+1|a,a+1} + 2M_{a+1,a|a,a+1} + M_{a+1,a|a+1,a} + M_{a+1,a+1|a+1,a+1} + M_{a+2,a|a,a+2} + M_{a+2,a+1|a+1,a+2}",
    ),
    br(
        "P_{a,b|b,a}:1.3",
        "a,b|b,a",
        |a, b, _c| b == a,
        "M_{a,a|a,a} + M_{a+1,a|a,a+1} + M_{a,a+1|a+1,a} + M_{a+1,a+1|a+1,a+1} + M_{a+1,a|a+1,a} + M_{a,a+1|a,a+1}",
    ),
    br(
        "P_{a,b|a,b}:2.1",
        "a,b|a,b",
        |a, b, _c| b < a - 1,
        "M_{a,b|a,b} + M_{a+1,b|a+1,b} + M_{a,b+1|a,b+1} + M_{a+1,b+1|a+1,b+1} + M_{a,b|b,a} + M_{a+1,b|b,a+1} + M_{a,b+1|b+1,a} + M_{a+1,b+1|b+1,a+1}",
    ),
    br(
        "P_{a,b|a,b}:2.2",
        "a,b|a,b",
        |a, b, _c| b == a - 1,
        "M_{a,a-1|a,a-1} + M_{a+1,a|a,a+1} + M_{a+1,a|a+1,a} + M_{a+1,a-1|a-1,a+1} + M_{a+1,a-1|a+1,a-1} + M_{a,a|a,a} + M_{a,a-1|a-1,a}",
    ),
    br(
        "P_{b,a|b,a}:1.1",
        "b,a|b,a",
        |a, b, _c| b < a - 1,
        "M_{b,a|b,a} + M_{b,a+1|b,a+1} + M_{b+1,a|b+1,a} + M_{b+1,a+1|b+1,a+1} + M_{a,b|b,a} + M_{a+1,b|b,a+1} + M_{a,b+1|b+1,a} + M_{a+1,b+1|b+1,a+1}",
    ),
    br(
        "P_{b,a|b,a}:1.2",
        "b,a|b,a",
        |a, b, _c| b == a - 1,
        "M_{a-1,a|a-1,a} + M_{a,a-1|a-1,a} + M_{a,a|a,a} + M_{a-1,a+1|a-1,a+1} + M_{a,a+1|a,a+1} + M_{a+1,a-1|a-1,a+1} + M_{a+1,a|a,a+1}",
    ),
    br(
        "P_{b,a|a,b}:2.1",
        "b,a|a,b",
        |a, b, _c| b < a - 1,
        "M_{b,a|a,b} + M_{b,a+1|a+1,b} + M_{b+1,a|a,b+1} + M_{b+1,a+1|a+1,b+1} + M_{b,a|b,a} + M_{b,a+1|b,a+1} + M_{b+1,a|b+1,a} + M_{b+1,a+1|b+1,a+1} + M_{a,b|a,b} + M_{a+1,b|a+1,b} + M_{a,b+1|a,b+1} + M_{a+1,b+1|a+1,b+1} + M_{a,b|b,a} + M_{a+1,b|b,a+1} + M_{a,b+1|b+1,a} + M_{a+1,b+1|b+1,a+1}",
    ),
    br(
        "P_{b,a|a,b}:2.2",
        "b,a|a,b",
        |a, b, _c| b == a - 1,
        "M_{a-1,a|a,a-1} + M_{a,a+1|a,a+1} + M_{a,a+1|a+1,a} + M_{a-1,a+1|a+1,a-1} + M_{a-1,a+1|a-1,a+1} + M_{a-1,a|a-1,a} + M_{a,a-1|a,a-1} + M_{a+1,a|a,a+1} + M_{a+1,a|a+1,a} + M_{a+1,a-1|a-1,a+1} + M_{a+1,a-1|a+1,a-1} + 2M_{a,a|a,a} + M_{a,a-1|a-1,a}",
    ),
];

static COMPOSITION: &[Branch] = &[
    br(
        "M_{a,b|b,a}:1.1",
        "a,b|b,a",
        |a, b, _c| b < a - 2,
        "L_{a,b|b,a} + L_{a,b|a,b} + L_{b,a|b,a} + L_{b,a|a,b} + L_{a-1,b|b,a-1} + L_{a-1,b|a-1,b} + L_{b,a-1|b,a-1} + L_{b,a-1|a-1,b} + L_{a,b-1|b-1,a} + L_{a,b-1|a,b-1} + L_{b-1,a|b-1,a} + L_{b-1,a|a,b-1} + L_{a-1,b-1|b-1,a-1} + L_{a-1,b-1|a-1,b-1} + L_{b-1,a-1|b-1,a-1} + L_{b-1,a-1|a-1,b-1}",
    ),
    br(
        "M_{a,b|b,a}:1.2",
        "a,b|b,a",
        |a, b, _c| b == a - 2,
        "L_{a,a-2|a-2,a} + L_{a,a-2|a,a-2} + L_{a-2,a|a-2,a} + L_{a-2,a|a,a-2} + L_{a,a-3|a-3,a} + L_{a,a-3|a,a-3} + L_{a-3,a|a-3,a} + L_{a-3,a|a,a-3} + L_{a-1,a-3|a-3,a-1} + L_{a-1,a-3|a-1,a-3} + L_{a-3,a-1|a-3,a-1} + L_{a-3,a-1|a-1,a-3} + L_{a-1,a-2|a-2,a-1} + L_{a-1,a-2|a-1,a-2} + L_{a-2,a-1|a-2,a-1} + L_{a-2,a-1|a-1,a-2} + L_{a-2,a-3|a-3,a-2}",
    ),
    br(
        "M_{a,b|b,a}:1.3",
        "a,b|b,a",
        |a, b, _c| b == a - 1,
        "L_{a,a-1|a-1,a} + L_{a-1,a|a-1,a} + L_{a,a-1|a,a-1} + L_{a-1,a|a,a-1} + 2L_{a-1,a-2|a-2,a-1} + L_{a-2,a-1|a-2,a-1} + L_{a-1,a-2|a-1,a-2} + L_{a-2,a-1|a-1,a-2} + L_{a-1,a-1|a-1,a-1} + L_{a-2,a-3|a-3,a-2}",
    ),
    br(
        "M_{a,b|b,a}:1.4",
        "a,b|b,a",
        |a, b, _c| b == a,
        "L_{a,a-1|a-1,a} + L_{a,a|a,a} + L_{a,a-1|a,a-1} + L_{a-1,a|a-1,a} + 2L_{a-1,a|a,a-1} + L_{a-1,a-2|a-2,a-1} + L_{a-1,a-1|a-1,a-1}",
    ),
    br(
        "M_{a,b|a,b}:2.1",
        "a,b|a,b",
        |a, b, _c| b < a - 2,
        "L_{a,b|a,b} + L_{b,a|a,b} + L_{a-1,b|a-1,b} + L_{b,a-1|a-1,b} + L_{a,b-1|a,b-1} + L_{b-1,a|a,b-1} + L_{a-1,b-1|a-1,b-1} + L_{b-1,a-1|a-1,b-1}",
    ),
    br(
        "M_{a,b|a,b}:2.2",
        "a,b|a,b",
        |a, b, _c| b == a - 2,
        "L_{a,a-2|a,a-2} + L_{a-2,a|a,a-2} + L_{a-1,a-2|a-1,a-2} + L_{a-2,a-1|a-1,a-2} + L_{a,a-3|a,a-3} + L_{a-3,a|a,a-3} + L_{a-1,a-3|a-1,a-3} + L_{a-3,a-1|a-1,a-3}",
    ),
    br(
        "M_{a,b|a,b}:2.3",
        "a,b|a,b",
        |a, b, _c| b == a - 1,
        "L_{a,a-1|a,a-1} + L_{a-1,a|a,a-1} + L_{a-1,a-2|a-2,a-1} + L_{a-1,a-1|a-1,a-1} + L_{a-1,a-2|a-1,a-2} + L_{a-2,a-1|a-1,a-2}",
    ),
    br(
        "M_{b,a|b,a}:1.1",
        "b,a|b,a",
        |a, b, _c| b < a - 2,
        "L_{b,a|b,a} + L_{b,a|a,b} + L_{b,a-1|b,a-1} + L_{b,a-1|a-1,b} + L_{b-1,a|b-1,a} + L_{b-1,a|a,b-1} + L_{a-1,b-1|a-1,b-1} + L_{b-1,a-1|a-1,b-1}",
    ),
    br(
        "M_{b,a|b,a}:1.2",
        "b,a|b,a",
        |a, b, _c| b == a - 2,
        "L_{a-2,a|a-2,a} + L_{a-2,a|a,a-2} + L_{a-2,a-1|a-2,a-1} + L_{a-2,a-1|a-1,a-2} + L_{a-3,a|a-3,a} + L_{a-3,a|a,a-3} + L_{a-3,a-1|a-3,a-1} + L_{a-3,a-1|a-1,a-3}",
    ),
    br(
        "M_{b,a|b,a}:1.3",
        "b,a|b,a",
        |a, b, _c| b == a - 1,
        "L_{a-1,a|a-1,a} + L_{a-1,a|a,a-1} + L_{a-1,a-2|a-2,a-1} + L_{a-1,a-1|a-1,a-1} + L_{a-2,a-1|a-2,a-1} + L_{a-2,a-1|a-1,a-2}",
    ),
    br(
        "M_{b,a|a,b}:2.1",
        "b,a|a,b",
        |a, b, _c| b < a - 2,
        "L_{b,a|a,b} + L_{b,a-1|a-1,b} + L_{b-1,a|a,b-1} + L_{b-1,a-1|a-1,b-1}",
    ),
    br(
        "M_{b,a|a,b}:2.2",
        "b,a|a,b",
        |a, b, _c| b == a - 2,
        "L_{a-2,a|a,a-2} + L_{a-3,a|a,a-3} + L_{a-3,a-1|a-1,a-3} + L_{a-2,a-1|a-1,a-2}",
    ),
    br(
        "M_{b,a|a,b}:2.3",
        "b,a|a,b",
        |a, b, _c| b == a - 1,
        "L_{a-1,a|a,a-1} + L_{a-1,a-1|a-1,a-1} + L_{a-2,a-1|a-1,a-2}",
    ),
];
