# Copyright (C) 2024
# entwinelib contributors.
# All rights reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""
entwinelib - crossed products by coalgebras

`entwinelib` builds crossed products ``M # C`` of an algebra fixed under a
coalgebra coaction, checks their axioms on sampled elements, and compares
them under gauge transformations. The dual construction over a quotient
coalgebra ``C / J_kappa`` is available as well.

All scalars are exact: rationals, or Laurent polynomials in ``q``. As in the
rest of the package, strings are unicode on Python 2 and 3:

.. code-block:: python

   >>> from __future__ import unicode_literals
   >>> from entwinelib import build_instance
   >>> eq2 = build_instance("eq2")
"""

__version__ = "0.1.0"

from .kernel import CheckReport, SampleSpec, Vect  # noqa: F401,E402
from .entwine import Entwining, EntwiningData, InstanceParams  # noqa: F401,E402
from .crossprod import CrossedProductData, crossed_mul  # noqa: F401,E402
from .cleft import Trivialization, derive_crossed_data  # noqa: F401,E402
from .gauge import GaugeTransformation, gauge_transform  # noqa: F401,E402
from .dualcross import DualCrossedData, DualEntwiningData, build_quotient  # noqa: F401,E402
from .instances import build_instance  # noqa: F401,E402
