use super::{Equation, IndexedOperator, OperatorExpression};

/// `R_{124}`, `K_{7,8,10,16}`, `Y^{-1}_{15,6,4,3,2}`.
pub fn latex_operator(op: &IndexedOperator) -> String {
    let inv = if op.inverted { "^{-1}" } else { "" };
    format!("{}{inv}_{{{}}}", op.kind, op.subscript(true))
}

/// Product notation, leftmost factor acting last.
pub fn latex_expression(expr: &OperatorExpression) -> String {
    let parts: Vec<String> = expr.written().iter().map(latex_operator).collect();
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join(" ")
    }
}

pub fn latex_equation(eq: &Equation) -> String {
    format!("{}\n= {}", latex_expression(&eq.lhs), latex_expression(&eq.rhs))
}

pub fn text_equation(eq: &Equation) -> String {
    format!("{} ({} factors)\n  {}\n= {}", eq.ty, eq.lhs.len(), eq.lhs, eq.rhs)
}
