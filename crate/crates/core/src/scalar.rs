// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! Numeric types accepted as edge weights.

use std::fmt::Debug;

use num_traits::{ToPrimitive, Zero};

/// Edge cost usable by the shortest-path routines.
///
/// Implemented for the primitive floats and integers. Floats must be finite;
/// signed types must be non-negative at call time.
pub trait Weight: Copy + PartialOrd + Zero + ToPrimitive + Debug + Send + Sync + 'static {
    fn is_finite_weight(self) -> bool;
}

macro_rules! float_weight {
    ($($t:ty),*) => {$(
        impl Weight for $t {
            #[inline]
            fn is_finite_weight(self) -> bool {
                self.is_finite()
            }
        }
    )*};
}

macro_rules! int_weight {
    ($($t:ty),*) => {$(
        impl Weight for $t {
            #[inline]
            fn is_finite_weight(self) -> bool {
                true
            }
        }
    )*};
}

float_weight!(f32, f64);
int_weight!(u8, u16, u32, u64, usize, i8, i16, i32, i64, isize);
