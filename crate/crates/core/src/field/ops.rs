//! Operator boilerplate: each type implements `&a op &b`, and these macros
//! forward the owned and mixed variants to it.

macro_rules! forward_binop {
    ($t:ty, $tr:ident, $m:ident) => {
        impl std::ops::$tr<$t> for $t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t {
                std::ops::$tr::$m(&self, &rhs)
            }
        }
        impl std::ops::$tr<&$t> for $t {
            type Output = $t;
            fn $m(self, rhs: &$t) -> $t {
                std::ops::$tr::$m(&self, rhs)
            }
        }
        impl std::ops::$tr<$t> for &$t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t {
                std::ops::$tr::$m(self, &rhs)
            }
        }
    };
}

macro_rules! forward_assign {
    ($t:ty, $tr:ident, $m:ident, $op:tt) => {
        impl std::ops::$tr<$t> for $t {
            fn $m(&mut self, rhs: $t) {
                *self = &*self $op &rhs;
            }
        }
        impl std::ops::$tr<&$t> for $t {
            fn $m(&mut self, rhs: &$t) {
                *self = &*self $op rhs;
            }
        }
    };
}

macro_rules! forward_all {
    ($t:ty) => {
        $crate::field::ops::forward_binop!($t, Add, add);
        $crate::field::ops::forward_binop!($t, Sub, sub);
        $crate::field::ops::forward_binop!($t, Mul, mul);
        $crate::field::ops::forward_assign!($t, AddAssign, add_assign, +);
        $crate::field::ops::forward_assign!($t, SubAssign, sub_assign, -);
        $crate::field::ops::forward_assign!($t, MulAssign, mul_assign, *);
        impl std::ops::Neg for $t {
            type Output = $t;
            fn neg(self) -> $t {
                -&self
            }
        }
    };
}

pub(crate) use forward_all;
pub(crate) use forward_assign;
pub(crate) use forward_binop;
