import { Component, Injectable } from '@angular/core';

@Component({ selector: 'app-patient-view', template: `<p>{{ title }}</p>` })
export class PatientViewComponent { title = 'Patient view'; }
