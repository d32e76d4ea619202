"""Fifty expressions for the parse/print round trip."""

EXPRESSIONS = [
    "d", "u", "h", "1", "0", "-3/2", "d*u", "u*d", "d*u*d", "h^2 - h^2",
    "h^3", "u^2*h*d^2", "d^3*u^3", "(d + u)^2", "(h - 1)*(h + 1)", "2*d - 3*u + h/5",
    "d*h*u", "h*u", "d*h", "u*h*d - d*h*u", "(1+1*sqrt(2))*h", "(1-1*sqrt(2))/3*d*u",
    "sqrt(2)*u - sqrt(2)*u", "((d))", "-d*u", "-(h + d)", "u^0", "d^1*u^1",
    "(u*d)^2", "(d*u)^2 - (u*d)^2", "h^2*u - u*h^2", "7", "1/7*h", "(2 + h)^3",
    "d*d*u*u", "u*u*d*d", "(h - u)*(h + d)", "3*(d - u)*(d + u)", "h*(u*d - 2)",
    "d^2*h^2*u^2", "-1/2*u*h + 1/3*h*d", "(u + 1)*(d + 1)*(h + 1)", "u*(d*u - u*d)",
    "d^4", "u^4*h", "h^5 - 5*h", "((1+1*sqrt(2))/2)^2*u", "(d + h + u)^3",
    "2*sqrt(2)*h*d - sqrt(2)*d*h", "(3-2*sqrt(2))*(3+2*sqrt(2))*u",
]
assert len(EXPRESSIONS) == 50
