// Copyright 2026 The qpf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "qpf/angle_expr.hpp"
#include "qpf/compiler.hpp"
#include "qpf/core.hpp"
#include "qpf/entanglement_lab.hpp"
#include "qpf/fock_backend.hpp"
#include "qpf/qutrit_gates.hpp"
#include "qpf/spin_algebra.hpp"
