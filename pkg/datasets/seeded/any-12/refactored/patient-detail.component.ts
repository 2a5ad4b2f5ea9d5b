import { Component } from '@angular/core';
import { Patient, Api } from './patient.model';

@Component({
  selector: 'app-patient-detail',
  template: `<p>{{ current?.name }}</p>`
})
export class PatientDetailComponent {
  current: Patient | null = null;
  constructor(private api: Api) {}

  meta: Record<string, string> = {};

  patient: Patient | null = null;
  patients: Patient[] = [];

  load(id: number): void {
    this.api.get(id).subscribe((data: Patient) => { this.current = data; });
  }

}
