import { Component, Injectable } from '@angular/core';
import { BasePatientPageComponent } from './base-patient-page';

@Component({
  selector: 'app-patient-page',
  template: `<h1>{{ pageTitle }}</h1>`
})
export class PatientPageComponent extends BasePatientPageComponent {
  pageTitle = 'Patient Page';
}
