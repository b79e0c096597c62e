/*
Copyright 2026 The featprop Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/
#pragma once

// Propagation core; trainer.hpp and manifest.hpp pull in Eigen and OpenSSL
// and are included separately.
#include "featprop/common.hpp"
#include "featprop/features.hpp"
#include "featprop/graph.hpp"
#include "featprop/oracle.hpp"
#include "featprop/parallel.hpp"
#include "featprop/propagate.hpp"
#include "featprop/push.hpp"
#include "featprop/reuse.hpp"
#include "featprop/rng.hpp"
#include "featprop/synthetic.hpp"
#include "featprop/verify.hpp"
