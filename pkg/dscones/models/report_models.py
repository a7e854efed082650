from pydantic import BaseModel, Field, field_validator, model_validator
from typing import Any, Dict, List, Optional, Union


Scalar = Union[int, str]


class FailureRecord(BaseModel):
     """
     One failed verification case.
     """
     case_id  : str = Field(..., description="Stable identifier of the case inside its suite, e.g. 'B2/psi_vanishing/17'.")
     inputs   : Dict[str, Any] = Field(default_factory=dict, description="Inputs of the case, rationals as 'p/q' strings.")
     expected : Any = Field(None, description="Value predicted by the identity under test.")
     got      : Any = Field(None, description="Value actually computed.")


class VerifyReport(BaseModel):
     """
     Report of one verification suite on one system.
     """
     suite        : str = Field(..., description="Suite name: appendixA, appendixB, section1, section2, section3, section5 or section6.")
     system       : str = Field(..., description="Root system label, e.g. 'B2' or 'A1xA1'.")
     cases_run    : int = Field(..., ge=0, description="Number of cases evaluated.")
     cases_failed : int = Field(..., ge=0, description="Number of failed cases.")
     seed         : int = Field(..., description="Seed the randomized cases were drawn from.")
     failures     : List[FailureRecord] = Field(default_factory=list, description="Failed cases, in input order.")


     @field_validator('seed')
     @classmethod
     def validate_seed(cls, value: int) -> int:
          if not 0 <= value < 2 ** 64:
               raise ValueError(f"Seed must fit in 64 bits, got {value}.")
          return value


     @model_validator(mode='after')
     def validate_failure_count(self) -> "VerifyReport":
          if self.cases_failed != len(self.failures):
               raise ValueError(
                    f"cases_failed={self.cases_failed} does not match {len(self.failures)} recorded failures."
               )
          if self.cases_failed > self.cases_run:
               raise ValueError("cases_failed cannot exceed cases_run.")
          return self


class SuiteSummary(BaseModel):
     """
     Aggregate report for a multi-suite run (`verify --suite all`).
     """
     seed         : int = Field(..., description="Seed shared by every suite.")
     cases_run    : int = Field(..., ge=0, description="Total cases over all reports.")
     cases_failed : int = Field(..., ge=0, description="Total failures over all reports.")
     reports      : List[VerifyReport] = Field(..., description="Per suite and system reports, in run order.")


     @model_validator(mode='after')
     def validate_totals(self) -> "SuiteSummary":
          if self.cases_run != sum(r.cases_run for r in self.reports):
               raise ValueError("cases_run is not the sum of the suite reports.")
          if self.cases_failed != sum(r.cases_failed for r in self.reports):
               raise ValueError("cases_failed is not the sum of the suite reports.")
          return self


class DTableReport(BaseModel):
     """
     Output of `table d`: d and d^vee keyed by reduced words.
     """
     system       : str = Field(..., description="Root system label.")
     base_chamber : str = Field(..., description="Reduced word of the base chamber, 'e' for the standard one.")
     q            : int = Field(..., description="q(R) = (|R+| + dim X) / 2.")
     seed         : int = Field(..., description="Seed used for the generic points.")
     x0           : List[Scalar] = Field(..., description="Generic point x0 in the base chamber.")
     lambda0      : List[Scalar] = Field(..., description="Generic functional lambda0 in the base chamber.")
     d            : Dict[str, int] = Field(..., description="d(w) keyed by reduced word.")
     d_vee        : Dict[str, int] = Field(..., description="d^vee(w) keyed by reduced word.")


class GoldenTable(BaseModel):
     """
     On-disk golden d-table.
     """
     system       : str = Field(..., description="Root system label.")
     base_chamber : str = Field("e", description="Reduced word of the base chamber.")
     q            : int = Field(..., description="q(R).")
     table        : Dict[str, int] = Field(..., description="d(w) keyed by reduced word.")


     @field_validator('table')
     @classmethod
     def validate_table(cls, value: Dict[str, int]) -> Dict[str, int]:
          if "e" not in value:
               raise ValueError("A golden table must contain the identity word 'e'.")
          return value


class EvalValue(BaseModel):
     """
     Output of `eval` for integer and vector valued functions.
     """
     value : Union[int, bool, List[Scalar], List[List[Scalar]], List[str]] = Field(..., description="The computed value.")


class WeightTermModel(BaseModel):
     """
     One signed Kostant weight of E^nu_P.
     """
     sign           : int = Field(..., description="eps(w), +1 or -1.")
     weight         : List[Scalar] = Field(..., description="The weight w(lambda_B + rho_B) - rho_B.")
     kostant_length : int = Field(..., ge=0, description="Length of w relative to B(P).")
     word           : str = Field(..., description="Reduced word of w.")


     @field_validator('sign')
     @classmethod
     def validate_sign(cls, value: int) -> int:
          if value not in (1, -1):
               raise ValueError(f"A Kostant sign is +1 or -1, got {value}.")
          return value


class WeightSumModel(BaseModel):
     """
     Output of `eval e_nu_p`.
     """
     system : str = Field(..., description="Root system label.")
     levi   : List[int] = Field(..., description="1-based simple roots of the Levi subset J.")
     p      : str = Field(..., description="The open cone C_P, named by a Weyl word or fan index.")
     nu     : Optional[Union[str, List[Scalar]]] = Field(None, description="nu as a weight or a sentinel.")
     terms  : List[WeightTermModel] = Field(..., description="Surviving terms, by (Kostant length, word).")
