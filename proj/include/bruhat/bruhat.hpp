// Copyright 2026 The Bruhat Authors.
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

#include "bruhat/bruhat_poset.hpp"
#include "bruhat/coxeter.hpp"
#include "bruhat/duality.hpp"
#include "bruhat/dynkin.hpp"
#include "bruhat/errors.hpp"
#include "bruhat/groups.hpp"
#include "bruhat/io.hpp"
#include "bruhat/node_set.hpp"
#include "bruhat/permutation.hpp"
#include "bruhat/polished.hpp"
#include "bruhat/signed_permutation.hpp"
#include "bruhat/verify.hpp"
