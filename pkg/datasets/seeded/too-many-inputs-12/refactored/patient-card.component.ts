import { Component, Input, input } from '@angular/core';

export interface PatientCardConfig {
  name: string;
  age: number;
  email: string;
  role: string;
  isActive: boolean;
  showAvatar: boolean;
  highlight: boolean;
}

@Component({
  selector: 'app-patient-card',
  template: `<div>{{ config.name }}</div>`
})
export class PatientCardComponent {
  @Input() config!: PatientCardConfig;
}
